"""Finite-model semantics: subsumption, concept identity, disjointness.

Concepts are interpreted intensionally over an explicit, finite domain space:
a domain of individual labels and a set of worlds, with one extension per
(concept, world) pair.  Real state-of-affairs spaces are unbounded; the
desk-scale truncation here is what makes exhaustive oracle checks possible.

All operations are pure; models are immutable and safe for parallel
property testing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .errors import UncoveredConcept
from .model import ConceptId, Finding, OntologyStore
from .taxonomy import Taxonomy

Extension = frozenset[str]


@dataclass(frozen=True)
class WorldModel:
    """A domain space with per-world extensions for a set of concepts.

    ``ext`` must be total: every covered concept defines an extension in
    every world, and every extension is a subset of the domain.
    """

    domain: frozenset[str]
    worlds: tuple[str, ...]
    ext: Mapping[ConceptId, Mapping[str, Extension]]

    def __post_init__(self) -> None:
        world_set = set(self.worlds)
        if len(world_set) != len(self.worlds):
            raise ValueError("world labels must be distinct")
        for cid, per_world in self.ext.items():
            missing = world_set - set(per_world)
            if missing:
                raise ValueError(f"concept {cid} lacks extensions for worlds {sorted(missing)}")
            extra = set(per_world) - world_set
            if extra:
                raise ValueError(f"concept {cid} defines unknown worlds {sorted(extra)}")
            for world, members in per_world.items():
                if not members <= self.domain:
                    raise ValueError(
                        f"extension of concept {cid} in world {world!r} leaves the domain"
                    )

    @classmethod
    def build(cls, domain: Iterable[str], worlds: Iterable[str],
              ext: Mapping[ConceptId, Mapping[str, Iterable[str]]]) -> "WorldModel":
        return cls(
            frozenset(domain),
            tuple(worlds),
            {int(cid): {w: frozenset(members) for w, members in per_world.items()}
             for cid, per_world in ext.items()},
        )

    @classmethod
    def from_json(cls, source: str | bytes | Path) -> "WorldModel":
        """Load from a JSON document {"domain": [...], "worlds": [...], "ext": {...}}."""
        if isinstance(source, Path):
            source = source.read_text(encoding="utf-8")
        doc = json.loads(source)
        return cls.build(doc["domain"], doc["worlds"], doc["ext"])

    def to_json(self) -> str:
        return json.dumps({
            "domain": sorted(self.domain),
            "worlds": list(self.worlds),
            "ext": {str(cid): {w: sorted(members) for w, members in sorted(per_world.items())}
                    for cid, per_world in sorted(self.ext.items())},
        }, ensure_ascii=False, indent=2)

    def covers(self, concept_id: ConceptId) -> bool:
        return concept_id in self.ext

    def extension(self, concept_id: ConceptId, world: str) -> Extension:
        if concept_id not in self.ext:
            raise UncoveredConcept(f"model does not cover concept {concept_id}")
        return self.ext[concept_id][world]


def admissible_extensions(concept_id: ConceptId, model: WorldModel) -> frozenset[Extension]:
    """The set of extensions the concept takes across all worlds (duplicates collapse)."""
    if not model.covers(concept_id):
        raise UncoveredConcept(f"model does not cover concept {concept_id}")
    return frozenset(model.ext[concept_id][w] for w in model.worlds)


def subsumes(general: ConceptId, specific: ConceptId, model: WorldModel) -> bool:
    """True iff every instance of ``specific`` is an instance of ``general``
    in every world of the model."""
    for cid in (general, specific):
        if not model.covers(cid):
            raise UncoveredConcept(f"model does not cover concept {cid}")
    return all(model.ext[specific][w] <= model.ext[general][w] for w in model.worlds)


def concepts_identical(c1: ConceptId, c2: ConceptId, model: WorldModel,
                       *, pointwise: bool = True) -> bool:
    """Concept identity over the model.

    The default reads identity per world: the two concepts take the same
    extension in every world (equivalently, each subsumes the other).  With
    ``pointwise=False`` the weaker reading is used instead: the admissible
    extension sets are equal, ignoring which world produced which extension.
    """
    for cid in (c1, c2):
        if not model.covers(cid):
            raise UncoveredConcept(f"model does not cover concept {cid}")
    if pointwise:
        return all(model.ext[c1][w] == model.ext[c2][w] for w in model.worlds)
    return admissible_extensions(c1, model) == admissible_extensions(c2, model)


def check_taxonomy(model: WorldModel, taxonomy: Taxonomy) -> list[Finding]:
    """Check a taxonomy snapshot against a model.

    Flags parent edges whose subsumption fails in some world and sibling
    pairs whose extensions intersect in some world.  Taxonomy nodes the
    model does not cover are reported as inapplicable (warning) rather than
    silently passing.
    """
    findings: list[Finding] = []
    uncovered = sorted(n for n in taxonomy.nodes if not model.covers(n))
    for node in uncovered:
        findings.append(Finding(
            "UncoveredConcept", "warning", node,
            "model does not cover this concept; checks involving it were skipped",
        ))
    covered = taxonomy.nodes - set(uncovered)

    for child in sorted(covered):
        parent = taxonomy.parent_of.get(child)
        if parent is None or parent not in covered:
            continue
        if not subsumes(parent, child, model):
            world = next(w for w in model.worlds
                         if not model.ext[child][w] <= model.ext[parent][w])
            findings.append(Finding(
                "SubsumptionViolation", "error", child,
                f"extension of {child} leaves its parent {parent} in world {world!r}",
                related=(parent, child, world),
            ))

    for parent, sibs in sorted(taxonomy.siblings().items()):
        sibs = [s for s in sibs if s in covered]
        for i, a in enumerate(sibs):
            for b in sibs[i + 1:]:
                for world in model.worlds:
                    overlap = model.ext[a][world] & model.ext[b][world]
                    if overlap:
                        findings.append(Finding(
                            "DisjointnessViolation", "error", a,
                            f"siblings {a} and {b} share instances "
                            f"{sorted(overlap)} in world {world!r}",
                            related=(a, b, world),
                        ))
                        break  # first offending world per pair
    return findings


def synonym_classes(store: OntologyStore) -> dict[ConceptId, frozenset[str]]:
    """Terms grouped into equivalence classes by the concept they lexicalize.

    Two terms are synonymous iff they lexicalize the same concept, so the
    classes are exactly the synsets keyed by concept id.
    """
    return {c.id: frozenset(s.term for s in c.synset) for c in store.concepts()}


def union_model(taxonomy: Taxonomy, worlds: Iterable[str] = ("w0",),
                prefix: str = "x") -> WorldModel:
    """A model that satisfies any forest: each leaf gets a private individual
    and each inner node the union of its descendants' individuals, constant
    across worlds."""
    leaves = sorted(taxonomy.leaves())
    private = {leaf: f"{prefix}{leaf}" for leaf in leaves}
    members: dict[ConceptId, set[str]] = {n: set() for n in taxonomy.nodes}
    for leaf in leaves:
        members[leaf].add(private[leaf])
        node = taxonomy.parent_of.get(leaf)
        while node is not None:
            members[node].add(private[leaf])
            node = taxonomy.parent_of.get(node)
    world_list = tuple(worlds)
    return WorldModel(
        frozenset(private.values()),
        world_list,
        {n: {w: frozenset(ms) for w in world_list} for n, ms in members.items()},
    )
