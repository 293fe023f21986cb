"""Diacritic-consistent term search over a store snapshot.

The index keys every sense by its skeleton; a query matches a stored term
when the skeletons agree and no base letter carries conflicting marks
(equal mark sets, or one side unmarked).  Exact diacritic matches rank
first, then entries with fewer marked-vs-unmarked letters, then concept id.
The index is immutable after build; rebuilds swap atomically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lexicons import LexiconRegistry
from .model import OntologyStore, Sense
from .normalize import NormalizedKey, absence_mismatches, marks_consistent, normalize_term


@dataclass(frozen=True)
class IndexEntry:
    term: str
    key: NormalizedKey
    concept_id: int | None = None
    sense: Sense | None = None
    lexicon_id: str | None = None
    entry_id: int | None = None

    @property
    def is_concept(self) -> bool:
        return self.concept_id is not None


@dataclass(frozen=True)
class SearchHit:
    entry: IndexEntry
    exact: bool
    mark_gaps: int

    @property
    def concept_id(self) -> int | None:
        return self.entry.concept_id

    @property
    def sense(self) -> Sense | None:
        return self.entry.sense


@dataclass(frozen=True)
class SearchIndex:
    mode: str
    by_skeleton: dict[str, tuple[IndexEntry, ...]]
    size: int

    def entries(self) -> list[IndexEntry]:
        return [e for group in self.by_skeleton.values() for e in group]


def build_index(store: OntologyStore, mode: str = "strict",
                lexicons: LexiconRegistry | None = None) -> SearchIndex:
    """Index all ontology senses plus registered lexicon headwords."""
    grouped: dict[str, list[IndexEntry]] = {}
    count = 0
    for sense, concept in store.senses():
        key = normalize_term(sense.term, mode)
        grouped.setdefault(key.skeleton, []).append(
            IndexEntry(sense.term, key, concept_id=concept.id, sense=sense))
        count += 1
    for individual in store.individuals():
        for sense in individual.names:
            key = normalize_term(sense.term, mode)
            grouped.setdefault(key.skeleton, []).append(
                IndexEntry(sense.term, key, concept_id=individual.instance_of, sense=sense))
            count += 1
    if lexicons is not None:
        for entry in lexicons.senses():
            key = normalize_term(entry.headword, mode)
            grouped.setdefault(key.skeleton, []).append(
                IndexEntry(entry.headword, key,
                           lexicon_id=entry.lexicon_id, entry_id=entry.entry_id))
            count += 1
    return SearchIndex(mode, {k: tuple(v) for k, v in grouped.items()}, count)


def _rank_key(hit: SearchHit) -> tuple:
    entry = hit.entry
    return (
        0 if hit.exact else 1,
        hit.mark_gaps,
        0 if entry.is_concept else 1,
        entry.concept_id if entry.is_concept else 0,
        entry.sense.sense_id if entry.sense else 0,
        entry.lexicon_id or "",
        entry.entry_id or 0,
    )


def query(q: str, index: SearchIndex, match: str = "exact") -> list[SearchHit]:
    """Senses whose skeleton matches q's and whose marks are consistent.

    ``match`` may be "exact" (whole term), "prefix", or "substring"; the
    fuzzier modes compare marks over the aligned window only.
    """
    qkey = normalize_term(q, index.mode)
    hits: list[SearchHit] = []
    if match == "exact":
        for entry in index.by_skeleton.get(qkey.skeleton, ()):
            if marks_consistent(qkey, entry.key):
                hits.append(SearchHit(
                    entry,
                    exact=qkey.marks == entry.key.marks,
                    mark_gaps=absence_mismatches(qkey, entry.key),
                ))
    elif match in ("prefix", "substring"):
        for skeleton, entries in index.by_skeleton.items():
            offsets: list[int]
            if match == "prefix":
                offsets = [0] if skeleton.startswith(qkey.skeleton) else []
            else:
                offsets = _occurrences(skeleton, qkey.skeleton)
            if not offsets:
                continue
            for entry in entries:
                best = _best_window(qkey, entry.key, offsets)
                if best is not None:
                    hits.append(SearchHit(entry, exact=False, mark_gaps=best))
    else:
        raise ValueError(f"unknown match mode: {match!r}")
    hits.sort(key=_rank_key)
    return hits


def _occurrences(haystack: str, needle: str) -> list[int]:
    out = []
    start = 0
    while True:
        pos = haystack.find(needle, start)
        if pos < 0:
            return out
        out.append(pos)
        start = pos + 1


def _best_window(qkey: NormalizedKey, stored: NormalizedKey,
                 offsets: list[int]) -> int | None:
    best: int | None = None
    for offset in offsets:
        window = stored.marks[offset:offset + len(qkey.marks)]
        gaps = 0
        ok = True
        for qm, sm in zip(qkey.marks, window):
            if qm and sm and qm != sm:
                ok = False
                break
            if bool(qm) != bool(sm):
                gaps += 1
        if ok and (best is None or gaps < best):
            best = gaps
    return best
