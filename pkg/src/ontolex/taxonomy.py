"""Subsumption tree maintenance and structural audits of foreign hierarchies.

The in-store taxonomy is a forest: no cycles, at most one parent per node.
Foreign hierarchies (imported from other resources) carry no such guarantee;
the audit operations report redundant edges and cycles instead of fixing
them.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .errors import CycleError, CyclicInputError, MultipleParentError, UnknownId
from .model import ConceptId, Finding, OntologicalProfile, OntologyStore


@dataclass(frozen=True)
class Taxonomy:
    """Immutable forest over concept ids.

    Sibling disjointness is an axiom schema over all sibling sets; it is
    checked semantically by the formal-semantics module, not syntactically
    here.
    """

    nodes: frozenset[ConceptId]
    parent_of: Mapping[ConceptId, ConceptId]

    @classmethod
    def from_edges(cls, nodes: Iterable[ConceptId],
                   edges: Iterable[tuple[ConceptId, ConceptId]] = ()) -> "Taxonomy":
        t = cls(frozenset(nodes), {})
        for child, parent in edges:
            t = set_parent(child, parent, t)
        return t

    @classmethod
    def from_store(cls, store: OntologyStore) -> "Taxonomy":
        nodes = frozenset(c.id for c in store.concepts())
        parent_of = {c.id: c.parent for c in store.concepts() if c.parent is not None}
        for child, parent in parent_of.items():
            if parent not in nodes:
                raise UnknownId(f"concept {child} has unknown parent {parent}")
        t = cls(nodes, parent_of)
        cycle = _find_parent_cycle(parent_of)
        if cycle:
            raise CycleError(f"parent links contain a cycle: {cycle}")
        return t

    def with_node(self, concept_id: ConceptId) -> "Taxonomy":
        return Taxonomy(self.nodes | {concept_id}, self.parent_of)

    def parent(self, concept_id: ConceptId) -> ConceptId | None:
        self._require(concept_id)
        return self.parent_of.get(concept_id)

    def children(self, concept_id: ConceptId) -> list[ConceptId]:
        self._require(concept_id)
        return sorted(c for c, p in self.parent_of.items() if p == concept_id)

    def roots(self) -> list[ConceptId]:
        return sorted(n for n in self.nodes if n not in self.parent_of)

    def leaves(self) -> set[ConceptId]:
        return set(self.nodes) - set(self.parent_of.values())

    def is_leaf(self, concept_id: ConceptId) -> bool:
        self._require(concept_id)
        return concept_id not in set(self.parent_of.values())

    def siblings(self) -> dict[ConceptId, list[ConceptId]]:
        """Sibling sets keyed by shared parent (only parents with >= 2 children)."""
        groups: dict[ConceptId, list[ConceptId]] = {}
        for child, parent in self.parent_of.items():
            groups.setdefault(parent, []).append(child)
        return {p: sorted(cs) for p, cs in groups.items() if len(cs) >= 2}

    def _require(self, concept_id: ConceptId) -> None:
        if concept_id not in self.nodes:
            raise UnknownId(f"unknown concept id {concept_id}")


def _find_parent_cycle(parent_of: Mapping[int, int]) -> list[int] | None:
    state: dict[int, int] = {}  # 1 = on path, 2 = done
    for start in parent_of:
        if state.get(start):
            continue
        path: list[int] = []
        node: int | None = start
        while node is not None and node in parent_of:
            if state.get(node) == 1:
                return path[path.index(node):]
            if state.get(node) == 2:
                break
            state[node] = 1
            path.append(node)
            node = parent_of[node]
        for n in path:
            state[n] = 2
    return None


def set_parent(child: ConceptId, parent: ConceptId, taxonomy: Taxonomy,
               *, reparent: bool = False) -> Taxonomy:
    """Return a new snapshot with ``child`` placed under ``parent``.

    Silent moves are rejected: changing an existing parent requires the
    explicit ``reparent`` flag, because taxonomic edits are audit-sensitive.
    """
    taxonomy._require(child)
    taxonomy._require(parent)
    current = taxonomy.parent_of.get(child)
    if current is not None and current != parent and not reparent:
        raise MultipleParentError(
            f"concept {child} already has parent {current}; pass reparent=True to move it"
        )
    if parent == child:
        raise CycleError(f"concept {child} cannot be its own parent")
    # Walk up from the proposed parent; hitting the child means a cycle.
    seen = child
    node: ConceptId | None = parent
    new_parent_of = dict(taxonomy.parent_of)
    new_parent_of.pop(child, None)
    while node is not None:
        if node == seen:
            raise CycleError(f"{parent} is a descendant of {child}")
        node = new_parent_of.get(node)
    new_parent_of[child] = parent
    return Taxonomy(taxonomy.nodes, new_parent_of)


def ancestors(concept_id: ConceptId, taxonomy: Taxonomy) -> list[ConceptId]:
    """Ancestors from direct parent to root; empty for roots."""
    taxonomy._require(concept_id)
    chain: list[ConceptId] = []
    node = taxonomy.parent_of.get(concept_id)
    while node is not None:
        if node in chain or node == concept_id:
            raise CycleError(f"parent links of {concept_id} form a cycle")
        chain.append(node)
        node = taxonomy.parent_of.get(node)
    return chain


def check_forest(taxonomy: Taxonomy) -> bool:
    """O(N) sanity check: no node with two parents, no directed cycle."""
    return _find_parent_cycle(taxonomy.parent_of) is None


def check_rigidity(taxonomy: Taxonomy,
                   profiles: Mapping[ConceptId, OntologicalProfile | str]) -> list[Finding]:
    """Flag every (ancestor, descendant) pair where an anti-rigid concept
    sits above a rigid one.

    ``profiles`` maps concept ids to profiles or bare rigidity strings;
    missing ids count as unspecified.
    """

    def rigidity(cid: ConceptId) -> str:
        p = profiles.get(cid, "unspecified")
        return p.rigidity if isinstance(p, OntologicalProfile) else p

    findings: list[Finding] = []
    for node in sorted(taxonomy.nodes):
        if rigidity(node) != "rigid":
            continue
        for anc in ancestors(node, taxonomy):
            if rigidity(anc) == "anti-rigid":
                findings.append(Finding(
                    "RigidityViolation", "error", anc,
                    f"anti-rigid concept {anc} subsumes rigid concept {node}",
                    related=(anc, node),
                ))
    return findings


# -- foreign hierarchies ----------------------------------------------------


@dataclass(frozen=True)
class ForeignHierarchy:
    """External subsumption data under audit; may be faulty by design."""

    nodes: frozenset[str]
    edges: frozenset[tuple[str, str]]  # (child, parent)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]]) -> "ForeignHierarchy":
        edge_set = frozenset(edges)
        nodes = frozenset(n for e in edge_set for n in e)
        return cls(nodes, edge_set)

    @classmethod
    def from_tsv(cls, source: str | Path) -> "ForeignHierarchy":
        """Load child<TAB>parent edges; blank lines and '#' comments ignored."""
        text = Path(source).read_text(encoding="utf-8") if isinstance(source, Path) else source
        edges = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise ValueError(f"line {lineno}: expected child<TAB>parent, got {line!r}")
            edges.append((parts[0], parts[1]))
        return cls.from_edges(edges)

    def parents_of(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {n: set() for n in self.nodes}
        for child, parent in self.edges:
            adj[child].add(parent)
        return adj


def audit_cycles(hierarchy: ForeignHierarchy) -> list[list[str]]:
    """Closed paths in the hierarchy, one per strongly connected knot.

    Each returned list ``[a, b, c]`` is a path a -> b -> c -> a along edges
    of the hierarchy.  Empty iff the hierarchy is acyclic.
    """
    adj = hierarchy.parents_of()
    cycles: list[list[str]] = []
    for comp in _tarjan_sccs(adj):
        if len(comp) > 1:
            cycles.append(_cycle_within(adj, comp))
        else:
            (node,) = comp
            if node in adj[node]:
                cycles.append([node])
    cycles.sort(key=lambda c: (min(c), len(c)))
    return cycles


def _tarjan_sccs(adj: dict[str, set[str]]) -> list[list[str]]:
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    counter = 0
    sccs: list[list[str]] = []

    for root in sorted(adj):
        if root in index:
            continue
        work = [(root, iter(sorted(adj[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for succ in it:
                if succ not in index:
                    index[succ] = low[succ] = counter
                    counter += 1
                    stack.append(succ)
                    on_stack.add(succ)
                    work.append((succ, iter(sorted(adj[succ]))))
                    advanced = True
                    break
                if succ in on_stack:
                    low[node] = min(low[node], index[succ])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    top = stack.pop()
                    on_stack.discard(top)
                    comp.append(top)
                    if top == node:
                        break
                sccs.append(comp)
    return sccs


def _cycle_within(adj: dict[str, set[str]], comp: list[str]) -> list[str]:
    members = set(comp)
    start = min(comp)
    path = [start]
    seen = {start}
    node = start
    while True:
        nxt = min(s for s in adj[node] if s in members)
        if nxt == start:
            return path
        if nxt in seen:  # inner loop; close it instead
            return path[path.index(nxt):]
        path.append(nxt)
        seen.add(nxt)
        node = nxt


def audit_redundant_edges(hierarchy: ForeignHierarchy) -> set[tuple[str, str]]:
    """Edges (a, b) for which a also reaches b via a path of length >= 2.

    These are the transitive-reduction surplus edges; removing them leaves
    reachability unchanged.  Raises :class:`CyclicInputError` on cyclic
    input (report cycles first with :func:`audit_cycles`).
    """
    if audit_cycles(hierarchy):
        raise CyclicInputError("hierarchy contains cycles; redundancy is undefined")
    adj = hierarchy.parents_of()
    reach = _reachable_sets(adj)
    redundant: set[tuple[str, str]] = set()
    for child, parent in hierarchy.edges:
        for mid in adj[child]:
            if mid != parent and parent in reach[mid]:
                redundant.add((child, parent))
                break
    return redundant


def _reachable_sets(adj: dict[str, set[str]]) -> dict[str, set[str]]:
    order = _topological_order(adj)
    reach: dict[str, set[str]] = {n: set() for n in adj}
    for node in order:  # successors are finished before their predecessors
        for succ in adj[node]:
            reach[node].add(succ)
            reach[node] |= reach[succ]
    return reach


def _topological_order(adj: dict[str, set[str]]) -> list[str]:
    """Nodes ordered so every successor precedes the nodes pointing at it."""
    state: dict[str, int] = {}
    out: list[str] = []
    for root in sorted(adj):
        if root in state:
            continue
        stack: list[tuple[str, Iterable[str]]] = [(root, iter(sorted(adj[root])))]
        state[root] = 1
        while stack:
            node, it = stack[-1]
            pushed = False
            for succ in it:
                if succ not in state:
                    state[succ] = 1
                    stack.append((succ, iter(sorted(adj[succ]))))
                    pushed = True
                    break
            if not pushed:
                stack.pop()
                state[node] = 2
                out.append(node)
    return out
