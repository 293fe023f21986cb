"""
Diacritic-consistent search and the linked-data surface
=======================================================

A query matches a stored term when their skeletons agree and no letter
carries conflicting marks, so undiacritized queries reach diacritized
entries and vice versa.  The same snapshot backs the URL scheme, JSON
concept documents, and N-Triples export.
"""

import json

from ontolex import ServiceContext, build_index, export_triples, normalize_term, query, render_concept, resolve_route
from ontolex.fixtures import top_levels_store

store = top_levels_store()
index = build_index(store)

key = normalize_term("فَيْرُوس")
print("skeleton:", key.skeleton, "marks:", key.mark_names())

for q in ("فَيْرُوس", "فيروس", "فُيروس"):  # exact, bare, conflicting damma
    hits = query(q, index)
    print(f"query {q!r}: {[h.concept_id for h in hits]}")

# Routes cover ids, profiles, relations, and term lookup.
for path in ("/concept/13", "/concept/13/profile", "/concept/subtypes/3",
             "/concept/%D9%81%D9%8A%D8%B1%D9%88%D8%B3"):
    print(path, "->", resolve_route(path))

# The JSON document for a concept carries its synset, annotations, links.
ctx = ServiceContext(store=store, domain="ontology.example")
doc = render_concept(13, ctx)
print(json.dumps({k: doc[k] for k in ("id", "uri", "parent", "gloss")},
                 ensure_ascii=False, indent=2))

# N-Triples serialization for the same concept, stable and sorted.
print(export_triples(13, ctx))

# To serve everything over HTTP:
#   ontolex serve src/ontolex/data/top_levels.xml --addr 127.0.0.1:8000
