"""
Scoring annotator agreement and taxonomy coverage
=================================================

Two annotators place external dictionary senses onto the taxonomy, each
with a precision and a confidence percentage.  The statistics compare the
two sets, grade partial matches through explicit rules, and report how
comprehensively the taxonomy tops the sources.
"""

from ontolex import (
    EntityRef,
    MappingCorrespondence,
    MappingStore,
    PartialRuleSet,
    Taxonomy,
    agreement_stats,
    combined_agreement,
    coverage_report,
    paired_relation_histogram,
    weak_mappings,
)
from ontolex.fixtures import top_levels_labels, top_levels_store
from ontolex.mapping import format_agreement_rows


def place(source, target, relation, annotator, precision=90, confidence=85):
    return MappingCorrespondence(
        e1=EntityRef("dictionary", source),
        e2=EntityRef("ontology", target),
        relation=relation, precision=precision, confidence=confidence,
        annotator=annotator,
    )


# Special cases that count as partial (not different) agreement: the
# general node vs its listed subtypes, and one interchangeable pair.
rules = PartialRuleSet.build(
    parent_subtype_pairs=[("attribute", ["physical attribute"])],
    symmetric_pairs=[("description", "proposition")],
)

universe = [f"entry{i}" for i in range(1, 9)]
annotator_a = MappingStore.from_records([
    place("entry1", "attribute", "SameAs", "A1"),
    place("entry2", "attribute", "SameAs", "A1"),
    place("entry3", "attribute", "SameAs", "A1", precision=55, confidence=40),
    place("entry4", "description", "SameAs", "A1"),
    place("entry5", "quality", "SubClassOf", "A1"),
    place("entry6", "state", "SubClassOf", "A1"),
])
annotator_b = MappingStore.from_records([
    place("entry1", "attribute", "SameAs", "A2"),
    place("entry2", "physical attribute", "SameAs", "A2"),
    place("entry3", "attribute", "SameAs", "A2"),
    place("entry4", "proposition", "SameAs", "A2"),
    place("entry5", "role", "SubClassOf", "A2"),
])

table = agreement_stats(annotator_a, annotator_b, rules, universe, label="A1 vs. A2")
print(format_agreement_rows([table]))
print("combined agreement:", combined_agreement(table), "%")
print("weak mappings (P<60 or C<50):",
      [m.e1.entity_id for m in weak_mappings(annotator_a, 60, 50)])

# Placement coverage against the shipped upper taxonomy: equivalents and
# under-leaf placements count as correctly placed; direct subclasses of
# non-leaf nodes point at missing middle categories.
store = top_levels_store()
taxonomy = Taxonomy.from_store(store)
labels = top_levels_labels(store)
placements = MappingStore.from_records(
    [place(f"p{i}", "13", "SubClassOf", "Reference") for i in range(6)]      # under virus
    + [place(f"q{i}", "22", "SubClassOf", "Reference") for i in range(3)]    # under interval
    + [place("r1", "29", "SameAs", "Reference"),                             # equals quality
       place("r2", "10", "SubClassOf", "Reference")]                         # under a non-leaf
)
report = coverage_report(placements, taxonomy, total_considered=13, excluded=2,
                         labels=labels)
print()
print(report.format_text())

print("\nrelation histogram:")
print(paired_relation_histogram(placements).format_text())
