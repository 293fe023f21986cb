"""Core metamodel records: concepts, senses, individuals, profiles, findings.

Records are immutable once published.  Mutation happens by building a new
store snapshot through :class:`StoreBuilder`; snapshots are safe to share
across concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator

from .errors import DuplicateId, UnknownId

ConceptId = int

# Relation codes understood everywhere; open extension codes are allowed on
# concept records.  SubTypeOf is never stored in a relations list (it is the
# parent field) and InstanceOf from a concept lives on Individual records.
CORE_RELATIONS = frozenset({
    "SubTypeOf", "PartOf", "HasPart", "InstanceOf", "Type",
    "SameAs", "SuperClassOf", "SubClassOf", "Similar",
})

CANONICAL_LEXICALIZATION_TYPES = frozenset({
    "MSA", "DA", "classic", "dialectal-name", "scientific-name",
    "legal-name", "technical",
})

RIGIDITY_VALUES = ("rigid", "anti-rigid", "unspecified")
BENCHMARK_LEVELS = ("scientific", "expert", "commonsense", "unspecified")
STATUS_VALUES = ("well-investigated", "partial")


@dataclass(frozen=True)
class Sense:
    """A term-concept pair with its own usage annotations.

    ``area`` and ``era`` are open code strings carrying their leading ":"
    verbatim (e.g. ":Modern", ":Palestine&Jordan"); no closed vocabulary is
    enforced.
    """

    sense_id: int
    term: str
    area: str = ""
    era: str = ""
    lexicalization_type: str = ""
    pos: str = "noun"

    def __post_init__(self) -> None:
        if self.sense_id <= 0:
            raise ValueError("sense_id must be a positive integer")
        if not self.term:
            raise ValueError("sense term must be non-empty")


@dataclass(frozen=True)
class OntologicalProfile:
    """Analysis profile attached to a concept.

    ``formal_axioms`` are opaque expression strings; nothing in this package
    interprets them.  ``gap_rationale`` documents why a gap-filler concept
    was introduced.
    """

    distinguishing_characteristics: str = ""
    example_instances: tuple[str, ...] = ()
    identity_criteria: str = ""
    rigidity: str = "unspecified"
    formal_axioms: tuple[str, ...] = ()
    benchmark_level: str = "unspecified"
    gap_rationale: str = ""

    def __post_init__(self) -> None:
        if self.rigidity not in RIGIDITY_VALUES:
            raise ValueError(f"rigidity must be one of {RIGIDITY_VALUES}")
        if self.benchmark_level not in BENCHMARK_LEVELS:
            raise ValueError(f"benchmark_level must be one of {BENCHMARK_LEVELS}")

    def is_default(self) -> bool:
        return self == OntologicalProfile()


EMPTY_PROFILE = OntologicalProfile()


@dataclass(frozen=True)
class Concept:
    id: ConceptId
    gloss: str = ""
    example_sentence: str | None = None
    synset: tuple[Sense, ...] = ()
    area: str = ""
    era: str = ""
    status: str = "partial"
    gap_filler: bool = False
    parent: ConceptId | None = None
    relations: tuple[tuple[str, int], ...] = ()
    profile: OntologicalProfile = EMPTY_PROFILE

    def __post_init__(self) -> None:
        if self.id <= 0:
            raise ValueError("concept id must be a positive integer")
        if self.status not in STATUS_VALUES:
            raise ValueError(f"status must be one of {STATUS_VALUES}")

    @property
    def terms(self) -> tuple[str, ...]:
        return tuple(s.term for s in self.synset)

    def is_root(self) -> bool:
        return self.parent is None


@dataclass(frozen=True)
class Individual:
    """A named instance, kept in an id space separate from concepts."""

    id: int
    names: tuple[Sense, ...]
    instance_of: ConceptId

    def __post_init__(self) -> None:
        if self.id <= 0:
            raise ValueError("individual id must be a positive integer")


@dataclass(frozen=True)
class Finding:
    """One validation or lint result.

    ``related`` carries the other entities involved (ids, labels, world
    names) in a rule-specific order; ``span`` is a character range into the
    gloss for text-anchored rules.
    """

    rule_id: str
    severity: str  # "error" | "warning"
    concept: ConceptId | None
    message: str
    span: tuple[int, int] | None = None
    related: tuple = ()

    def __str__(self) -> str:
        where = f" concept={self.concept}" if self.concept is not None else ""
        return f"[{self.severity}] {self.rule_id}{where}: {self.message}"


class OntologyStore:
    """Immutable snapshot of concepts and individuals.

    Build one with :class:`StoreBuilder`; direct construction expects the
    invariants (unique ids, disjoint id spaces, unique sense ids) to already
    hold.
    """

    __slots__ = ("_concepts", "_individuals", "_sense_owner")

    def __init__(self, concepts: dict[int, Concept], individuals: dict[int, Individual],
                 sense_owner: dict[int, int]):
        self._concepts = concepts
        self._individuals = individuals
        self._sense_owner = sense_owner

    # -- lookup ---------------------------------------------------------

    def __contains__(self, concept_id: int) -> bool:
        return concept_id in self._concepts

    def __len__(self) -> int:
        return len(self._concepts)

    def concept(self, concept_id: int) -> Concept:
        try:
            return self._concepts[concept_id]
        except KeyError:
            raise UnknownId(f"no concept with id {concept_id}") from None

    def individual(self, individual_id: int) -> Individual:
        try:
            return self._individuals[individual_id]
        except KeyError:
            raise UnknownId(f"no individual with id {individual_id}") from None

    def concepts(self) -> Iterator[Concept]:
        for cid in sorted(self._concepts):
            yield self._concepts[cid]

    def individuals(self) -> Iterator[Individual]:
        for iid in sorted(self._individuals):
            yield self._individuals[iid]

    def senses(self) -> Iterator[tuple[Sense, Concept]]:
        for c in self.concepts():
            for s in c.synset:
                yield s, c

    def owner_of_sense(self, sense_id: int) -> ConceptId:
        try:
            return self._sense_owner[sense_id]
        except KeyError:
            raise UnknownId(f"no sense with id {sense_id}") from None

    def roots(self) -> list[ConceptId]:
        return sorted(c.id for c in self._concepts.values() if c.parent is None)

    def children_of(self, concept_id: int) -> list[ConceptId]:
        self.concept(concept_id)
        return sorted(c.id for c in self._concepts.values() if c.parent == concept_id)

    def instances_of(self, concept_id: int) -> list[int]:
        self.concept(concept_id)
        return sorted(i.id for i in self._individuals.values() if i.instance_of == concept_id)

    # -- derived views ---------------------------------------------------

    def builder(self) -> "StoreBuilder":
        """A mutable builder seeded with this snapshot's records."""
        b = StoreBuilder()
        for c in self.concepts():
            b.add_concept(c)
        for i in self.individuals():
            b.add_individual(i)
        return b


def _sorted_synset(senses: Iterable[Sense]) -> tuple[Sense, ...]:
    return tuple(sorted(senses, key=lambda s: s.sense_id))


class StoreBuilder:
    """Single-writer accumulator that produces immutable store snapshots.

    Ids may be supplied explicitly (imports) or allocated monotonically via
    :meth:`new_concept` / :meth:`new_sense_id`.  Synsets and relation lists
    are canonicalized (sorted by sense id / by (type, target)) so that equal
    content always builds an equal snapshot.
    """

    def __init__(self) -> None:
        self._concepts: dict[int, Concept] = {}
        self._individuals: dict[int, Individual] = {}
        self._sense_owner: dict[int, int] = {}
        self._next_concept_id = 1
        self._next_sense_id = 1
        self._next_individual_id = 1

    # -- id allocation ----------------------------------------------------

    def new_concept_id(self) -> int:
        cid = self._next_concept_id
        self._next_concept_id += 1
        return cid

    def new_sense_id(self) -> int:
        sid = self._next_sense_id
        self._next_sense_id += 1
        return sid

    def new_individual_id(self) -> int:
        iid = self._next_individual_id
        self._next_individual_id += 1
        return iid

    # -- insertion --------------------------------------------------------

    def add_concept(self, concept: Concept) -> Concept:
        cid = concept.id
        if cid in self._concepts:
            raise DuplicateId(f"concept id {cid} already in store")
        if cid in self._individuals:
            raise DuplicateId(f"concept id {cid} collides with an individual id")
        canonical = replace(
            concept,
            synset=_sorted_synset(concept.synset),
            relations=tuple(sorted(concept.relations)),
        )
        self._claim_senses(canonical.synset, cid)
        self._concepts[cid] = canonical
        self._next_concept_id = max(self._next_concept_id, cid + 1)
        return canonical

    def new_concept(self, **fields) -> Concept:
        return self.add_concept(Concept(id=self.new_concept_id(), **fields))

    def add_individual(self, individual: Individual) -> Individual:
        iid = individual.id
        if iid in self._individuals:
            raise DuplicateId(f"individual id {iid} already in store")
        if iid in self._concepts:
            raise DuplicateId(f"individual id {iid} collides with a concept id")
        canonical = replace(individual, names=_sorted_synset(individual.names))
        self._claim_senses(canonical.names, iid)
        self._individuals[iid] = canonical
        self._next_individual_id = max(self._next_individual_id, iid + 1)
        return canonical

    def _claim_senses(self, senses: tuple[Sense, ...], owner: int) -> None:
        seen = [s.sense_id for s in senses]
        for sid in seen:
            if sid in self._sense_owner:
                raise DuplicateId(f"sense id {sid} already used in store")
        if len(set(seen)) != len(seen):
            raise DuplicateId(f"sense id repeated within record {owner}")
        for sid in seen:
            self._sense_owner[sid] = owner
            self._next_sense_id = max(self._next_sense_id, sid + 1)

    def build(self) -> OntologyStore:
        # Individuals must point at known concepts.
        for ind in self._individuals.values():
            if ind.instance_of not in self._concepts:
                raise UnknownId(
                    f"individual {ind.id} is instance of unknown concept {ind.instance_of}"
                )
        return OntologyStore(dict(self._concepts), dict(self._individuals),
                             dict(self._sense_owner))


# -- local validity -------------------------------------------------------

def validate_concept_record(concept: Concept, store: OntologyStore | None = None) -> list[Finding]:
    """Check the record-local rules of one concept.

    Returns an empty list iff all local invariants hold.  Graph-level rules
    (cycles, sibling disjointness) live in the taxonomy and semantics
    modules.
    """
    findings: list[Finding] = []

    def flag(rule: str, severity: str, message: str, related: tuple = ()) -> None:
        findings.append(Finding(rule, severity, concept.id, message, related=related))

    if concept.parent is not None and not concept.synset:
        flag("EmptySynset", "error", "non-root concept has an empty synset")

    seen: set[str] = set()
    for s in concept.synset:
        if s.term in seen:
            flag("DuplicateSenseTerm", "error",
                 f"term {s.term!r} appears twice in the synset", related=(s.term,))
        seen.add(s.term)

    if concept.status == "well-investigated":
        p = concept.profile
        if not p.distinguishing_characteristics or p.rigidity == "unspecified":
            flag("IncompleteProfile", "error",
                 "well-investigated concept needs distinguishing characteristics "
                 "and a rigidity decision")

    if concept.gap_filler and not concept.profile.gap_rationale:
        flag("MissingGapRationale", "warning",
             "gap-filler concept carries no rationale note in its profile")

    for rel_type, target in concept.relations:
        if rel_type == "SubTypeOf":
            flag("MisplacedSubTypeOf", "error",
                 "SubTypeOf belongs in the parent field, not the relations list",
                 related=(target,))
        elif rel_type == "InstanceOf":
            flag("MisplacedInstanceOf", "error",
                 "InstanceOf from concepts is stored on Individual records only",
                 related=(target,))

    if store is not None and concept.parent is not None and concept.parent not in store:
        flag("DanglingParent", "error",
             f"parent {concept.parent} does not resolve in the store",
             related=(concept.parent,))

    return findings


def polysemy_index(store: OntologyStore) -> dict[str, set[ConceptId]]:
    """Map every term to the set of concepts whose synsets contain it.

    Terms mapped to more than one concept are the polysemous terms.
    """
    index: dict[str, set[ConceptId]] = {}
    for sense, concept in store.senses():
        index.setdefault(sense.term, set()).add(concept.id)
    return index
