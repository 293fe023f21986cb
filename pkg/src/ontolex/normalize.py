"""Diacritic-aware normalization of Arabic terms.

A term is decomposed into a *skeleton* (the base letters) and, for each base
letter, the set of diacritic marks attached to it.  Mark lists are sets per
letter because a shadda may co-occur with a vowel mark on the same letter.
"""

from __future__ import annotations

from dataclasses import dataclass

# Harakat and tanwin range handled as combining marks.
FATHATAN = "ً"
DAMMATAN = "ٌ"
KASRATAN = "ٍ"
FATHA = "َ"
DAMMA = "ُ"
KASRA = "ِ"
SHADDA = "ّ"
SUKUN = "ْ"

DIACRITICS = frozenset(chr(cp) for cp in range(0x064B, 0x0653))

SUPERSCRIPT_ALEF = "ٰ"

MARK_NAMES = {
    FATHATAN: "fathatan",
    DAMMATAN: "dammatan",
    KASRATAN: "kasratan",
    FATHA: "fatha",
    DAMMA: "damma",
    KASRA: "kasra",
    SHADDA: "shadda",
    SUKUN: "sukun",
}

# Letter folds applied to the skeleton in loose mode only.
_LOOSE_FOLDS = str.maketrans({
    "أ": "ا",  # alef hamza above -> alef
    "إ": "ا",  # alef hamza below -> alef
    "آ": "ا",  # alef madda -> alef
    "ى": "ي",  # alef maqsura -> yeh
    "ة": "ه",  # teh marbuta -> heh
})


@dataclass(frozen=True)
class NormalizedKey:
    """Skeleton plus one mark set per base letter (same length as skeleton)."""

    skeleton: str
    marks: tuple[frozenset[str], ...]

    def __post_init__(self) -> None:
        if len(self.skeleton) != len(self.marks):
            raise ValueError("marks list length must equal number of base letters")

    @property
    def fully_marked(self) -> bool:
        return all(self.marks)

    @property
    def unmarked(self) -> bool:
        return not any(self.marks)

    def mark_names(self) -> list[list[str]]:
        """Human-readable mark names per letter, in codepoint order."""
        return [sorted(MARK_NAMES.get(m, m) for m in ms) for ms in self.marks]


def normalize_term(term: str, mode: str = "strict") -> NormalizedKey:
    """Split ``term`` into skeleton and per-letter mark sets.

    ``strict`` removes the combining marks U+064B..U+0652 from the skeleton
    and records them per base letter.  ``loose`` additionally folds alef
    variants to bare alef, final alef maqsura to yeh, teh marbuta to heh,
    and drops the superscript alef.  Non-Arabic text passes through with
    empty mark sets.
    """
    if mode not in ("strict", "loose"):
        raise ValueError(f"unknown normalization mode: {mode!r}")
    letters: list[str] = []
    marks: list[set[str]] = []
    for ch in term:
        if ch in DIACRITICS:
            if marks:  # marks before any base letter are dropped
                marks[-1].add(ch)
            continue
        if mode == "loose" and ch == SUPERSCRIPT_ALEF:
            continue
        letters.append(ch)
        marks.append(set())
    skeleton = "".join(letters)
    if mode == "loose":
        skeleton = skeleton.translate(_LOOSE_FOLDS)
    return NormalizedKey(skeleton, tuple(frozenset(ms) for ms in marks))


def skeleton(term: str, mode: str = "strict") -> str:
    """Shorthand for ``normalize_term(term, mode).skeleton``."""
    return normalize_term(term, mode).skeleton


def marks_consistent(query: NormalizedKey, stored: NormalizedKey) -> bool:
    """True when the two keys share a skeleton and carry no conflicting marks.

    At each base letter the two mark sets must be equal, or at least one of
    them must be empty.
    """
    if query.skeleton != stored.skeleton:
        return False
    for qm, sm in zip(query.marks, stored.marks):
        if qm and sm and qm != sm:
            return False
    return True


def absence_mismatches(query: NormalizedKey, stored: NormalizedKey) -> int:
    """Count letters where exactly one side carries marks (consistent keys)."""
    return sum(1 for qm, sm in zip(query.marks, stored.marks) if bool(qm) != bool(sm))
