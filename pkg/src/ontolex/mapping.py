"""Cross-resource mapping correspondences and their evaluation statistics.

A correspondence links two entities with a relation plus two methodological
measures: precision (how much the mapper believes the relation holds) and
confidence (how sure the mapper is about the decision).  Both are opaque
percentages used to catch weak and doubtful mappings, not set-theoretic
claims.

The statistics here are pure functions over immutable mapping sets:
relation histograms, inter-annotator agreement with partial-match rules,
and placement coverage over a target taxonomy.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DuplicateMapping,
    RangeError,
    TargetMismatch,
    UnknownRelation,
    UnresolvedTarget,
)
from .model import ConceptId
from .taxonomy import Taxonomy

# Relation inventory accepted on correspondences, with inverse pairs grouped
# the way the summary table reports them.
RELATION_INVENTORY = (
    "SameAs", "SubClassOf", "SuperClassOf", "PartOf", "HasPart",
    "InstanceOf", "Type", "Similar",
)
PAIRED_RELATIONS = (
    ("SameAs",),
    ("SubClassOf", "SuperClassOf"),
    ("PartOf", "HasPart"),
    ("InstanceOf", "Type"),
    ("Similar",),
)

ONTOLOGY_RESOURCE = "ontology"


def round_percent(numerator: float, denominator: float) -> int:
    """Integer percent, rounded half away from zero."""
    if denominator == 0:
        return 0
    return int(100.0 * numerator / denominator + 0.5)


@dataclass(frozen=True)
class EntityRef:
    """A pointer into a registered resource or an external one.

    External ids (e.g. wordnet or wikidata identifiers) are kept as opaque
    strings; nothing is fetched or redistributed.
    """

    resource: str
    entity_id: str

    def __post_init__(self) -> None:
        if not self.resource or not self.entity_id:
            raise ValueError("resource and entity_id must be non-empty")


@dataclass(frozen=True)
class MappingCorrespondence:
    e1: EntityRef
    e2: EntityRef
    relation: str
    precision: float  # percent in [0, 100]
    confidence: float  # percent in [0, 100]
    annotator: str = ""
    note: str = ""

    def __post_init__(self) -> None:
        if self.relation not in RELATION_INVENTORY:
            raise UnknownRelation(f"relation {self.relation!r} is not in the inventory")
        for name, value in (("precision", self.precision), ("confidence", self.confidence)):
            if not 0 <= value <= 100:
                raise RangeError(f"{name} {value} outside [0, 100]")

    def key(self) -> tuple:
        return (self.e1, self.e2, self.relation, self.annotator)


class MappingStore:
    """Immutable ordered collection of correspondences.

    ``add`` returns a new store; duplicates of the same
    (e1, e2, relation, annotator) tuple are rejected.
    """

    __slots__ = ("_records", "_keys")

    def __init__(self, records: tuple[MappingCorrespondence, ...] = (),
                 _keys: frozenset | None = None):
        self._records = records
        self._keys = _keys if _keys is not None else frozenset(r.key() for r in records)

    @classmethod
    def from_records(cls, records: Iterable[MappingCorrespondence]) -> "MappingStore":
        out: list[MappingCorrespondence] = []
        keys: set = set()
        for record in records:
            k = record.key()
            if k in keys:
                raise DuplicateMapping(f"duplicate correspondence {k}")
            keys.add(k)
            out.append(record)
        return cls(tuple(out), frozenset(keys))

    def add(self, record: MappingCorrespondence) -> "MappingStore":
        k = record.key()
        if k in self._keys:
            raise DuplicateMapping(f"duplicate correspondence {k}")
        return MappingStore(self._records + (record,), self._keys | {k})

    def __iter__(self) -> Iterator[MappingCorrespondence]:
        return iter(self._records)

    def __len__(self) -> int:
        return len(self._records)

    def records(self) -> tuple[MappingCorrespondence, ...]:
        return self._records


def add_mapping(record: MappingCorrespondence, store: MappingStore) -> MappingStore:
    """Validated append; see :meth:`MappingStore.add`."""
    return store.add(record)


def weak_mappings(store: MappingStore, p_min: float, c_min: float) -> list[MappingCorrespondence]:
    """Correspondences below either threshold, for review or exclusion."""
    for name, value in (("p_min", p_min), ("c_min", c_min)):
        if not 0 <= value <= 100:
            raise RangeError(f"{name} {value} outside [0, 100]")
    return [m for m in store if m.precision < p_min or m.confidence < c_min]


# -- histograms --------------------------------------------------------------


@dataclass(frozen=True)
class RelationHistogram:
    counts: Mapping[str, int]
    total: int

    def to_json(self) -> str:
        return json.dumps({"counts": dict(self.counts), "total": self.total}, indent=2)

    def format_text(self) -> str:
        width = max(len(k) for k in self.counts) if self.counts else 8
        lines = [f"{'Relation':<{width}}  Number of Mappings"]
        for rel, n in self.counts.items():
            lines.append(f"{rel:<{width}}  {n}")
        lines.append(f"{'Total':<{width}}  {self.total}")
        return "\n".join(lines)


def relation_histogram(store: MappingStore) -> RelationHistogram:
    """Exact per-relation counts over the full inventory (zeros included)."""
    counter = Counter(m.relation for m in store)
    counts = {rel: counter.get(rel, 0) for rel in RELATION_INVENTORY}
    return RelationHistogram(counts, sum(counts.values()))


def paired_relation_histogram(store: MappingStore) -> RelationHistogram:
    """Histogram with inverse relation pairs merged into single rows."""
    counter = Counter(m.relation for m in store)
    counts = {"/".join(group): sum(counter.get(rel, 0) for rel in group)
              for group in PAIRED_RELATIONS}
    return RelationHistogram(counts, sum(counts.values()))


# -- inter-annotator agreement ------------------------------------------------


@dataclass(frozen=True)
class PartialRuleSet:
    """Target pairs that count as partial (rather than different) matches.

    ``parent_subtype_pairs`` lists a general target with its special-case
    subtypes; ``symmetric_pairs`` lists two targets that are treated as
    interchangeable.  Matching is direction-blind.
    """

    parent_subtype_pairs: tuple[tuple[str, frozenset[str]], ...] = ()
    symmetric_pairs: tuple[tuple[str, str], ...] = ()

    @classmethod
    def build(cls, parent_subtype_pairs: Iterable[tuple[str, Iterable[str]]] = (),
              symmetric_pairs: Iterable[tuple[str, str]] = ()) -> "PartialRuleSet":
        return cls(
            tuple((general, frozenset(subs)) for general, subs in parent_subtype_pairs),
            tuple(symmetric_pairs),
        )

    def related(self, target_a: str, target_b: str) -> bool:
        if target_a == target_b:
            return False
        for general, subtypes in self.parent_subtype_pairs:
            if (target_a == general and target_b in subtypes) or \
               (target_b == general and target_a in subtypes):
                return True
        for x, y in self.symmetric_pairs:
            if {target_a, target_b} == {x, y}:
                return True
        return False


@dataclass(frozen=True)
class AgreementTable:
    """Counts and integer percentages for one annotator pair.

    All four percentages use the mapped-by-both count as denominator;
    ``couldnt_map`` counts universe sources lacking a mapping from at least
    one side.
    """

    label: str
    exact: int
    partial: int
    different: int
    couldnt_map: int
    mapped_by_both: int
    universe_size: int

    @property
    def pct_exact(self) -> int:
        return round_percent(self.exact, self.mapped_by_both)

    @property
    def pct_partial(self) -> int:
        return round_percent(self.partial, self.mapped_by_both)

    @property
    def pct_different(self) -> int:
        return round_percent(self.different, self.mapped_by_both)

    @property
    def pct_couldnt_map(self) -> int:
        return round_percent(self.couldnt_map, self.mapped_by_both)

    def to_json(self) -> str:
        return json.dumps({
            "label": self.label,
            "exact": self.exact, "partial": self.partial,
            "different": self.different, "couldnt_map": self.couldnt_map,
            "mapped_by_both": self.mapped_by_both,
            "universe_size": self.universe_size,
            "pct": {
                "exact": self.pct_exact, "partial": self.pct_partial,
                "different": self.pct_different, "couldnt_map": self.pct_couldnt_map,
            },
            "combined_agreement": combined_agreement(self),
        }, indent=2)


def format_agreement_rows(rows: Sequence[AgreementTable]) -> str:
    """Aligned-text table: exact / partial / different / couldn't map."""
    couldnt = "Couldn't Map"
    header = (f"{'':<18}  {'Exact Mapping':>16}  {'Partial Mapping':>16}  "
              f"{'Different Mapping':>18}  {couldnt:>14}")
    lines = [header]
    for row in rows:
        lines.append(
            f"{row.label:<18}  "
            f"{f'{row.exact} ({row.pct_exact}%)':>16}  "
            f"{f'{row.partial} ({row.pct_partial}%)':>16}  "
            f"{f'{row.different} ({row.pct_different}%)':>18}  "
            f"{f'{row.couldnt_map} ({row.pct_couldnt_map}%)':>14}"
        )
    return "\n".join(lines)


def agreement_stats(a: MappingStore | Iterable[MappingCorrespondence],
                    b: MappingStore | Iterable[MappingCorrespondence],
                    rules: PartialRuleSet,
                    universe: Sequence[str],
                    label: str = "A vs. B") -> AgreementTable:
    """Compare two annotators' mappings over a shared source universe.

    For every source mapped by both sides the pair counts as Exact when
    target and relation coincide, Partial when the targets are related by a
    rule pair, and Different otherwise.  Sources in the universe that lack a
    mapping from at least one side count as couldn't-map.  Raises
    :class:`TargetMismatch` when the two sets do not target the same
    resource.
    """
    a_records = list(a)
    b_records = list(b)
    target_resources = {m.e2.resource for m in a_records} | {m.e2.resource for m in b_records}
    if len(target_resources) > 1:
        raise TargetMismatch(f"mapping sets target different resources: {sorted(target_resources)}")

    a_by_source = {m.e1.entity_id: m for m in a_records}
    b_by_source = {m.e1.entity_id: m for m in b_records}
    universe_set = set(universe)

    exact = partial = different = 0
    both = 0
    for source in universe_set:
        ma = a_by_source.get(source)
        mb = b_by_source.get(source)
        if ma is None or mb is None:
            continue
        both += 1
        if (ma.e2.entity_id, ma.relation) == (mb.e2.entity_id, mb.relation):
            exact += 1
        elif rules.related(ma.e2.entity_id, mb.e2.entity_id):
            partial += 1
        else:
            different += 1

    return AgreementTable(
        label=label,
        exact=exact,
        partial=partial,
        different=different,
        couldnt_map=len(universe_set) - both,
        mapped_by_both=both,
        universe_size=len(universe_set),
    )


def combined_agreement(table: AgreementTable) -> int:
    """Exact and partial matches together, as an integer percent of
    the mapped-by-both count."""
    return round_percent(table.exact + table.partial, table.mapped_by_both)


# -- placement coverage -------------------------------------------------------

PLACEMENT_CATEGORIES = ("EquivalentToNode", "UnderLeaf", "UnderNonLeaf", "Unmappable")


@dataclass(frozen=True)
class PlacementReport:
    """How externally sourced concepts land in the target taxonomy.

    ``comprehensiveness`` is the share of mapped concepts placed as
    equivalent to a node or under a leaf, in percent to one decimal;
    ``missing_categories`` tallies the non-leaf nodes that received
    direct subclass placements (candidate gaps in the upper levels).
    """

    equivalents_per_node: Mapping[ConceptId, int]
    subclasses_per_node: Mapping[ConceptId, int]
    equivalent_total: int
    under_leaf: int
    under_non_leaf: int
    unmappable: int
    mapped: int
    total_considered: int
    missing_categories: Mapping[ConceptId, int]
    labels: Mapping[ConceptId, str] = field(default_factory=dict)

    @property
    def correctly_placed(self) -> int:
        return self.equivalent_total + self.under_leaf

    @property
    def comprehensiveness(self) -> float:
        if not self.mapped:
            return 0.0
        return round(100.0 * self.correctly_placed / self.mapped, 1)

    @property
    def comprehensiveness_display(self) -> str:
        return f"{int(self.comprehensiveness + 0.5)}%"

    def label(self, node: ConceptId) -> str:
        return self.labels.get(node, str(node))

    def labeled_missing_categories(self) -> dict[str, int]:
        return {self.label(n): c for n, c in sorted(self.missing_categories.items())}

    def to_json(self) -> str:
        return json.dumps({
            "categories": {
                "EquivalentToNode": self.equivalent_total,
                "UnderLeaf": self.under_leaf,
                "UnderNonLeaf": self.under_non_leaf,
                "Unmappable": self.unmappable,
            },
            "mapped": self.mapped,
            "total_considered": self.total_considered,
            "correctly_placed": self.correctly_placed,
            "comprehensiveness": self.comprehensiveness,
            "per_node": {
                self.label(n): {"equivalents": self.equivalents_per_node.get(n, 0),
                                "subclasses": self.subclasses_per_node.get(n, 0)}
                for n in sorted(set(self.equivalents_per_node) | set(self.subclasses_per_node))
            },
            "missing_categories": self.labeled_missing_categories(),
        }, ensure_ascii=False, indent=2)

    def format_text(self) -> str:
        lines = [
            f"mapped: {self.mapped} of {self.total_considered} considered "
            f"({self.unmappable} excluded as unmappable)",
            f"equivalent to a node: {self.equivalent_total}",
            f"under a leaf node:    {self.under_leaf}",
            f"under a non-leaf:     {self.under_non_leaf}",
            f"correctly placed:     {self.correctly_placed} "
            f"({self.comprehensiveness}% -> {self.comprehensiveness_display})",
        ]
        touched = sorted(set(self.equivalents_per_node) | set(self.subclasses_per_node))
        if touched:
            lines.append("per node (equivalents / subclasses):")
            for node in touched:
                lines.append(f"  {self.label(node)}: "
                             f"{self.equivalents_per_node.get(node, 0)} / "
                             f"{self.subclasses_per_node.get(node, 0)}")
        if self.missing_categories:
            lines.append("non-leaf nodes receiving direct subclasses:")
            for node, count in sorted(self.missing_categories.items(),
                                      key=lambda kv: (-kv[1], kv[0])):
                lines.append(f"  {self.label(node)}: {count}")
        return "\n".join(lines)


def coverage_report(mappings: MappingStore | Iterable[MappingCorrespondence],
                    taxonomy: Taxonomy,
                    total_considered: int,
                    excluded: int,
                    labels: Mapping[ConceptId, str] | None = None) -> PlacementReport:
    """Classify placement mappings against a taxonomy.

    Accepts SameAs (equivalent to a node) and SubClassOf (placed under a
    node, split by whether the node is a leaf).  Raises
    :class:`UnresolvedTarget` when a target does not resolve in the
    taxonomy and :class:`UnknownRelation` for non-placement relations.
    """
    records = list(mappings)
    non_leaves = set(taxonomy.parent_of.values())
    equivalents: Counter = Counter()
    subclasses: Counter = Counter()
    under_leaf = under_non_leaf = 0
    for m in records:
        try:
            target = int(m.e2.entity_id)
        except ValueError:
            raise UnresolvedTarget(f"target {m.e2.entity_id!r} is not a concept id") from None
        if target not in taxonomy.nodes:
            raise UnresolvedTarget(f"target {target} is not a node of the taxonomy")
        if m.relation == "SameAs":
            equivalents[target] += 1
        elif m.relation == "SubClassOf":
            subclasses[target] += 1
            if target in non_leaves:
                under_non_leaf += 1
            else:
                under_leaf += 1
        else:
            raise UnknownRelation(
                f"relation {m.relation!r} is not a placement relation (SameAs/SubClassOf)"
            )
    missing = {node: count for node, count in subclasses.items() if node in non_leaves}
    return PlacementReport(
        equivalents_per_node=dict(equivalents),
        subclasses_per_node=dict(subclasses),
        equivalent_total=sum(equivalents.values()),
        under_leaf=under_leaf,
        under_non_leaf=under_non_leaf,
        unmappable=excluded,
        mapped=len(records),
        total_considered=total_considered,
        missing_categories=missing,
        labels=dict(labels or {}),
    )


# -- TSV interchange ----------------------------------------------------------

_TSV_COLUMNS = ("e1_resource", "e1_id", "e2_resource", "e2_id",
                "relation", "precision", "confidence", "annotator", "note")


def load_mappings_tsv(source: str | Path) -> MappingStore:
    """Read correspondences from TSV; blank lines and '#' comments ignored."""
    text = Path(source).read_text(encoding="utf-8") if isinstance(source, Path) else source
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    records = []
    for row_no, row in enumerate(csv.reader(lines, delimiter="\t"), start=1):
        if len(row) < 7:
            raise ValueError(f"row {row_no}: expected at least 7 columns, got {len(row)}")
        row = row + [""] * (len(_TSV_COLUMNS) - len(row))
        records.append(MappingCorrespondence(
            e1=EntityRef(row[0], row[1]),
            e2=EntityRef(row[2], row[3]),
            relation=row[4],
            precision=float(row[5]),
            confidence=float(row[6]),
            annotator=row[7],
            note=row[8],
        ))
    return MappingStore.from_records(records)


def save_mappings_tsv(store: MappingStore | Iterable[MappingCorrespondence]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, delimiter="\t", lineterminator="\n")
    for m in store:
        writer.writerow([
            m.e1.resource, m.e1.entity_id, m.e2.resource, m.e2.entity_id,
            m.relation, f"{m.precision:g}", f"{m.confidence:g}",
            m.annotator, m.note,
        ])
    return out.getvalue()
