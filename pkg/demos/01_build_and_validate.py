"""
Building a small ontology and validating it
===========================================

Concepts are immutable records collected through a builder; validation and
lints report findings instead of raising.
"""

from ontolex import (
    Concept,
    LintConfig,
    OntologicalProfile,
    Sense,
    StoreBuilder,
    Taxonomy,
    lint_gloss,
    lint_store,
    validate_concept_record,
)

# A miniature branch: state -> illness, plus the heartburn synset under
# illness, with the dialectal term annotated for where it is used.
builder = StoreBuilder()

builder.add_concept(Concept(
    id=100,
    gloss="A condition of some entity under certain circumstances.",
    synset=(Sense(sense_id=1, term="state"), Sense(sense_id=2, term="حَالَة")),
    status="well-investigated",
    profile=OntologicalProfile(
        distinguishing_characteristics="Holds of a bearer without implying change.",
        rigidity="anti-rigid",
    ),
))

builder.add_concept(Concept(
    id=101,
    gloss="A state in which the body's normal functioning is disturbed.",
    synset=(Sense(sense_id=3, term="illness"), Sense(sense_id=4, term="مَرَض")),
    parent=100,
))

builder.add_concept(Concept(
    id=102,
    gloss="An illness felt as burning behind the breastbone.",
    synset=(
        Sense(sense_id=5, term="حُمُوضَة", area=":MostArabCountries",
              era=":Modern", lexicalization_type=":MSA"),
        Sense(sense_id=6, term="حُرْقَة", area=":MostArabCountries",
              era=":Modern", lexicalization_type=":MSA"),
        Sense(sense_id=7, term="حَزَاز", area=":Palestine&Jordan",
              era=":Modern", lexicalization_type=":DA"),
    ),
    parent=101,
))

store = builder.build()
taxonomy = Taxonomy.from_store(store)

print("record-local validation:")
for concept in store.concepts():
    for finding in validate_concept_record(concept, store):
        print("  ", finding)
print("   (none)" if not any(validate_concept_record(c, store)
                             for c in store.concepts()) else "")

# The gloss rules: start with the supertype, add only new characteristics,
# avoid narrative phrasing.  This draft skips its supertype and rambles.
bad = Concept(
    id=103,
    gloss="A thing is an ailment if it disturbs the body; ailments are also "
          "those states of some entity under certain circumstances.",
    synset=(Sense(sense_id=8, term="ailment"),),
    parent=100,
)
print("\nfindings for a narrative gloss that skips its supertype:")
for finding in lint_gloss(bad, taxonomy, store):
    print("  ", finding)

# Rules are configurable; here G2 is relaxed before linting the whole store.
config = LintConfig(rules={"G2": False})
print("\nwhole-store lint with G2 off:", lint_store(store, taxonomy, config))
