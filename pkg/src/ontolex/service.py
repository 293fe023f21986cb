"""Linked-data concept service: URL scheme, JSON documents, N-Triples.

The URL scheme exposes concepts by id (``/concept/{id}``), their analysis
profile (``/concept/{id}/profile``), related entities
(``/concept/{relation}/{id}``), and term lookup (``/concept/{term}``).
All-digit path segments are read as concept ids, so an all-digit term is
reachable only through the ``?term=1`` escape hatch.

The WSGI app serves concurrent GETs from an immutable snapshot; writes
happen only through imports and the CLI, never over HTTP.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from urllib.parse import parse_qs, quote, unquote

from .errors import NotFound, UnknownId
from .lexicons import LexiconRegistry
from .mapping import MappingStore
from .model import Concept, OntologyStore
from .search import SearchIndex, build_index, query as search_query
from .taxonomy import Taxonomy

# Lowercased relation tokens accepted in /concept/{relation}/{id} paths.
ROUTE_RELATIONS = (
    "instances", "type", "subtypes", "supertype",
    "parts", "partof", "sameas", "similar",
)


@dataclass(frozen=True)
class Route:
    kind: str  # ConceptById | RelationQuery | TermLookup | Profile
    concept_id: int | None = None
    relation: str | None = None
    term: str | None = None

    @property
    def path(self) -> str:
        if self.kind == "ConceptById":
            return f"/concept/{self.concept_id}"
        if self.kind == "Profile":
            return f"/concept/{self.concept_id}/profile"
        if self.kind == "RelationQuery":
            return f"/concept/{self.relation}/{self.concept_id}"
        if self.kind == "TermLookup":
            term = self.term or ""
            suffix = "?term=1" if term.isdigit() else ""
            return f"/concept/{quote(term, safe='')}{suffix}"
        raise ValueError(f"unknown route kind {self.kind!r}")


def resolve_route(path: str, *, force_term: bool = False) -> Route:
    """Parse a request path into a Route.

    A trailing ``?term=1`` (inline or via ``force_term``) forces the
    term-lookup reading of an all-digit segment.  Raises :class:`NotFound`
    for paths outside the scheme.
    """
    path, _, query_string = path.partition("?")
    if query_string:
        force_term = force_term or parse_qs(query_string).get("term") == ["1"]
    if not path.startswith("/concept/"):
        raise NotFound(f"path {path!r} is outside the /concept/ scheme")
    segments = [unquote(s) for s in path[len("/concept/"):].split("/") if s != ""]
    if len(segments) == 1:
        (seg,) = segments
        if seg.isdigit() and not force_term:
            return Route("ConceptById", concept_id=int(seg))
        return Route("TermLookup", term=seg)
    if len(segments) == 2:
        first, second = segments
        if first.isdigit() and second == "profile":
            return Route("Profile", concept_id=int(first))
        if first in ROUTE_RELATIONS and second.isdigit():
            return Route("RelationQuery", relation=first, concept_id=int(second))
        raise NotFound(f"no route for {path!r}")
    raise NotFound(f"no route for {path!r}")


@dataclass
class ServiceContext:
    """Everything a running service needs, bound to one snapshot."""

    store: OntologyStore
    domain: str = "localhost:8000"
    mappings: MappingStore = field(default_factory=MappingStore)
    lexicons: LexiconRegistry | None = None
    taxonomy: Taxonomy = None  # type: ignore[assignment]
    index: SearchIndex = None  # type: ignore[assignment]
    search_mode: str = "strict"

    def __post_init__(self) -> None:
        if self.taxonomy is None:
            self.taxonomy = Taxonomy.from_store(self.store)
        if self.index is None:
            self.index = build_index(self.store, self.search_mode, self.lexicons)

    def concept_uri(self, concept_id: int) -> str:
        return f"http://{self.domain}/concept/{concept_id}"


def _sense_doc(sense) -> dict:
    return {
        "sense_id": sense.sense_id,
        "term": sense.term,
        "area": sense.area,
        "era": sense.era,
        "lexicalization_type": sense.lexicalization_type,
        "pos": sense.pos,
    }


def _concept_mappings(concept_id: int, ctx: ServiceContext) -> list[dict]:
    docs = []
    needle = str(concept_id)
    for m in ctx.mappings:
        if m.e1.resource == "ontology" and m.e1.entity_id == needle:
            other = m.e2
        elif m.e2.resource == "ontology" and m.e2.entity_id == needle:
            other = m.e1
        else:
            continue
        docs.append({
            "resource": other.resource,
            "entity_id": other.entity_id,
            "relation": m.relation,
            "precision": m.precision,
            "confidence": m.confidence,
        })
    return docs


def render_concept(concept_id: int, ctx: ServiceContext) -> dict:
    """JSON document for one concept; every emitted link resolves against
    the same snapshot."""
    concept = _get_concept(concept_id, ctx)
    relations: dict[str, list[str]] = {}
    for rel_type, target in concept.relations:
        if target in ctx.store:
            relations.setdefault(rel_type, []).append(ctx.concept_uri(target))
    return {
        "id": concept.id,
        "uri": ctx.concept_uri(concept.id),
        "gloss": concept.gloss,
        "example_sentence": concept.example_sentence,
        "area": concept.area,
        "era": concept.era,
        "status": concept.status,
        "gap_filler": concept.gap_filler,
        "synset": [_sense_doc(s) for s in concept.synset],
        "parent": ctx.concept_uri(concept.parent) if concept.parent is not None else None,
        "relations": relations,
        "profile": ctx.concept_uri(concept.id) + "/profile",
        "mappings": _concept_mappings(concept.id, ctx),
    }


def render_profile(concept_id: int, ctx: ServiceContext) -> dict:
    concept = _get_concept(concept_id, ctx)
    p = concept.profile
    return {
        "id": concept.id,
        "concept": ctx.concept_uri(concept.id),
        "distinguishing_characteristics": p.distinguishing_characteristics,
        "example_instances": list(p.example_instances),
        "identity_criteria": p.identity_criteria,
        "rigidity": p.rigidity,
        "formal_axioms": list(p.formal_axioms),
        "benchmark_level": p.benchmark_level,
        "gap_rationale": p.gap_rationale,
    }


def render_relation(relation: str, concept_id: int, ctx: ServiceContext) -> dict:
    """Entities reachable from a concept over one relation token."""
    concept = None
    if relation != "type":
        concept = _get_concept(concept_id, ctx)
    results: list = []
    if relation == "instances":
        for iid in ctx.store.instances_of(concept_id):
            ind = ctx.store.individual(iid)
            results.append({"individual_id": ind.id,
                            "names": [_sense_doc(s) for s in ind.names]})
    elif relation == "type":
        # works for individual ids; concepts answer with their parent
        try:
            ind = ctx.store.individual(concept_id)
            results.append(ctx.concept_uri(ind.instance_of))
        except UnknownId:
            concept = _get_concept(concept_id, ctx)
            if concept.parent is not None:
                results.append(ctx.concept_uri(concept.parent))
    elif relation == "subtypes":
        results = [ctx.concept_uri(c) for c in ctx.store.children_of(concept_id)]
    elif relation == "supertype":
        if concept.parent is not None:
            results = [ctx.concept_uri(concept.parent)]
    else:
        code_by_token = {"parts": "HasPart", "partof": "PartOf",
                         "sameas": "SameAs", "similar": "Similar"}
        code = code_by_token[relation]
        results = [ctx.concept_uri(target) for rel, target in concept.relations
                   if rel == code and target in ctx.store]
    return {
        "concept": ctx.concept_uri(concept_id),
        "relation": relation,
        "results": results,
    }


def render_term_lookup(term: str, ctx: ServiceContext) -> dict:
    hits = search_query(term, ctx.index)
    results = []
    for hit in hits:
        if hit.entry.is_concept:
            results.append({
                "kind": "concept",
                "id": hit.concept_id,
                "uri": ctx.concept_uri(hit.concept_id),
                "term": hit.entry.term,
                "gloss": ctx.store.concept(hit.concept_id).gloss,
                "exact": hit.exact,
            })
        else:
            results.append({
                "kind": "lexicon",
                "lexicon_id": hit.entry.lexicon_id,
                "entry_id": hit.entry.entry_id,
                "term": hit.entry.term,
                "exact": hit.exact,
            })
    return {"term": term, "results": results}


def _get_concept(concept_id: int, ctx: ServiceContext) -> Concept:
    if concept_id not in ctx.store:
        raise NotFound(f"no concept {concept_id}")
    return ctx.store.concept(concept_id)


# -- N-Triples export ---------------------------------------------------------


def _nt_literal(text: str) -> str:
    escaped = (text.replace("\\", "\\\\").replace('"', '\\"')
               .replace("\n", "\\n").replace("\r", "\\r").replace("\t", "\\t"))
    return f'"{escaped}"'


def _nt_object_for(resource: str, entity_id: str, ctx: ServiceContext) -> str:
    if resource == "ontology" and entity_id.isdigit():
        return f"<{ctx.concept_uri(int(entity_id))}>"
    if entity_id.startswith("http://") or entity_id.startswith("https://"):
        return f"<{entity_id}>"
    return _nt_literal(f"{resource}:{entity_id}")


def export_triples(concept_id: int, ctx: ServiceContext) -> str:
    """N-Triples serialization of one concept, line-sorted and byte-stable.

    Emits one triple per sense, one for the gloss, one per relation
    (including the parent link), and one per mapping correspondence
    (SameAs uses the owl:sameAs predicate).
    """
    concept = _get_concept(concept_id, ctx)
    subject = f"<{ctx.concept_uri(concept.id)}>"
    ns = f"http://{ctx.domain}/ns#"
    owl_same_as = "http://www.w3.org/2002/07/owl#sameAs"
    lines: list[str] = []
    for sense in concept.synset:
        lines.append(f"{subject} <{ns}lexicalization> {_nt_literal(sense.term)} .")
    if concept.gloss:
        lines.append(f"{subject} <{ns}gloss> {_nt_literal(concept.gloss)} .")
    if concept.parent is not None:
        lines.append(f"{subject} <{ns}SubTypeOf> <{ctx.concept_uri(concept.parent)}> .")
    for rel_type, target in concept.relations:
        lines.append(f"{subject} <{ns}{rel_type}> <{ctx.concept_uri(target)}> .")
    needle = str(concept.id)
    for m in ctx.mappings:
        if m.e1.resource == "ontology" and m.e1.entity_id == needle:
            other = m.e2
        elif m.e2.resource == "ontology" and m.e2.entity_id == needle:
            other = m.e1
        else:
            continue
        predicate = owl_same_as if m.relation == "SameAs" else f"{ns}mapping{m.relation}"
        lines.append(f"{subject} <{predicate}> {_nt_object_for(other.resource, other.entity_id, ctx)} .")
    return "\n".join(sorted(lines)) + ("\n" if lines else "")


# -- WSGI ---------------------------------------------------------------------


def make_wsgi_app(ctx: ServiceContext):
    """A read-only WSGI application over one immutable snapshot."""

    def respond(start_response, status: str, body: bytes, content_type: str):
        start_response(status, [
            ("Content-Type", content_type),
            ("Content-Length", str(len(body))),
            ("Access-Control-Allow-Origin", "*"),
        ])
        return [body]

    def json_body(doc) -> bytes:
        return json.dumps(doc, ensure_ascii=False, indent=2).encode("utf-8")

    def app(environ, start_response):
        if environ.get("REQUEST_METHOD", "GET") != "GET":
            return respond(start_response, "405 Method Not Allowed",
                           json_body({"error": "GET only"}), "application/json; charset=utf-8")
        path = environ.get("PATH_INFO", "/")
        query_string = environ.get("QUERY_STRING", "")
        if path == "/":
            doc = {
                "service": "ontolex concept service",
                "concepts": len(ctx.store),
                "roots": [ctx.concept_uri(r) for r in ctx.store.roots()],
                "routes": ["/concept/{id}", "/concept/{id}/profile",
                           "/concept/{relation}/{id}", "/concept/{term}"],
                "relations": list(ROUTE_RELATIONS),
            }
            return respond(start_response, "200 OK", json_body(doc),
                           "application/json; charset=utf-8")
        try:
            route = resolve_route(path + ("?" + query_string if query_string else ""))
            if route.kind == "ConceptById":
                accept = environ.get("HTTP_ACCEPT", "")
                if "application/n-triples" in accept:
                    body = export_triples(route.concept_id, ctx).encode("utf-8")
                    return respond(start_response, "200 OK", body,
                                   "application/n-triples; charset=utf-8")
                doc = render_concept(route.concept_id, ctx)
            elif route.kind == "Profile":
                doc = render_profile(route.concept_id, ctx)
            elif route.kind == "RelationQuery":
                doc = render_relation(route.relation, route.concept_id, ctx)
            else:
                doc = render_term_lookup(route.term, ctx)
        except NotFound as e:
            return respond(start_response, "404 Not Found",
                           json_body({"error": str(e)}), "application/json; charset=utf-8")
        return respond(start_response, "200 OK", json_body(doc),
                       "application/json; charset=utf-8")

    return app


def serve(ctx: ServiceContext, addr: str = "127.0.0.1:8000") -> None:
    """Blocking HTTP server for the WSGI app (snapshot swapped per process)."""
    from wsgiref.simple_server import make_server

    host, _, port = addr.partition(":")
    server = make_server(host or "127.0.0.1", int(port or "8000"), make_wsgi_app(ctx))
    print(f"serving {len(ctx.store)} concepts on http://{addr}/ "
          f"(IRIs use domain {ctx.domain})")
    server.serve_forever()
