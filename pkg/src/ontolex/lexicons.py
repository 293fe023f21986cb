"""Registry of digitized lexicons and their entries.

Entries load from TSV (lexicon_id, entry_id, headword, gloss, translations)
where translations are pipe-separated ``lang:term`` pairs.  Imports are
single-writer; share the registry only after loading is done.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .errors import DuplicateId, DuplicateLexicon, NotFound


@dataclass(frozen=True)
class Lexicon:
    lexicon_id: str
    title: str = ""
    languages: tuple[str, ...] = ()
    domain: str | None = None


@dataclass(frozen=True)
class LexicalSense:
    lexicon_id: str
    entry_id: int
    headword: str
    gloss: str = ""
    translations: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        if not self.headword:
            raise ValueError("headword must be non-empty")
        if self.entry_id <= 0:
            raise ValueError("entry_id must be a positive integer")


@dataclass
class LexiconRegistry:
    lexicons: dict[str, Lexicon] = field(default_factory=dict)
    _senses: dict[tuple[str, int], LexicalSense] = field(default_factory=dict)

    def register_lexicon(self, lexicon: Lexicon) -> None:
        if lexicon.lexicon_id in self.lexicons:
            raise DuplicateLexicon(f"lexicon {lexicon.lexicon_id!r} already registered")
        self.lexicons[lexicon.lexicon_id] = lexicon

    def add_sense(self, sense: LexicalSense) -> None:
        if sense.lexicon_id not in self.lexicons:
            self.register_lexicon(Lexicon(sense.lexicon_id, title=sense.lexicon_id))
        key = (sense.lexicon_id, sense.entry_id)
        if key in self._senses:
            raise DuplicateId(f"entry {key} already present")
        self._senses[key] = sense

    def lookup_sense(self, lexicon_id: str, entry_id: int) -> LexicalSense:
        if lexicon_id not in self.lexicons:
            raise NotFound(f"lexicon {lexicon_id!r} is not registered")
        try:
            return self._senses[(lexicon_id, entry_id)]
        except KeyError:
            raise NotFound(f"no entry {entry_id} in lexicon {lexicon_id!r}") from None

    def senses(self) -> Iterator[LexicalSense]:
        for key in sorted(self._senses):
            yield self._senses[key]

    def __len__(self) -> int:
        return len(self._senses)

    # -- TSV interchange --------------------------------------------------

    def load_tsv(self, source: str | Path) -> int:
        """Add entries from TSV text or a file; returns the number loaded."""
        text = Path(source).read_text(encoding="utf-8") if isinstance(source, Path) else source
        count = 0
        for row_no, row in enumerate(csv.reader(_data_lines(text), delimiter="\t"), start=1):
            if len(row) < 4:
                raise ValueError(f"row {row_no}: expected at least 4 columns, got {len(row)}")
            lexicon_id, entry_id, headword, gloss = row[0], row[1], row[2], row[3]
            translations = []
            if len(row) > 4 and row[4]:
                for pair in row[4].split("|"):
                    lang, sep, term = pair.partition(":")
                    if not sep:
                        raise ValueError(f"row {row_no}: translation {pair!r} lacks 'lang:term'")
                    translations.append((lang, term))
            self.add_sense(LexicalSense(
                lexicon_id=lexicon_id,
                entry_id=int(entry_id),
                headword=headword,
                gloss=gloss,
                translations=tuple(translations),
            ))
            count += 1
        return count

    def to_tsv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, delimiter="\t", lineterminator="\n")
        for sense in self.senses():
            writer.writerow([
                sense.lexicon_id,
                sense.entry_id,
                sense.headword,
                sense.gloss,
                "|".join(f"{lang}:{term}" for lang, term in sense.translations),
            ])
        return out.getvalue()


def _data_lines(text: str) -> list[str]:
    return [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
