"""Machine-checkable lints for gloss formulation and synset lexical policy.

Glosses are expected to start with the direct supertype, add only the
distinguishing characteristics the supertype does not already carry, and
state them as propositions rather than narrative.  The rules here are
heuristics for those guidelines: G2 uses a token-overlap proxy and the G3
narrative markers are a configurable pattern list, labeled as such.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Collection, Container

from .errors import UnknownParent
from .model import Concept, Finding, OntologyStore
from .normalize import normalize_term
from .taxonomy import Taxonomy

_ARTICLES = ("a", "an", "the")
_RELATIVE_PRONOUNS = ("that", "which", "who", "whom", "whose")
_ARABIC_ARTICLE = "ال"  # al- prefix

DEFAULT_G3_PATTERNS = (
    r"\bis\b[\w\s]*\bif\b",
    r"\balso\s+those\b",
)


@dataclass(frozen=True)
class LintConfig:
    """Rule switches and tunables; loads from / saves to a JSON document."""

    rules: dict[str, bool] = field(default_factory=dict)
    g2_threshold: float = 0.6
    g3_patterns: tuple[str, ...] = DEFAULT_G3_PATTERNS
    gap_budget: int = 4
    gap_budget_per: int = 1300

    def enabled(self, rule_id: str) -> bool:
        return self.rules.get(rule_id, True)

    @classmethod
    def from_json(cls, source: str | Path) -> "LintConfig":
        text = Path(source).read_text(encoding="utf-8") if isinstance(source, Path) else source
        doc = json.loads(text)
        return cls(
            rules=dict(doc.get("rules", {})),
            g2_threshold=float(doc.get("g2_threshold", 0.6)),
            g3_patterns=tuple(doc.get("g3_patterns", DEFAULT_G3_PATTERNS)),
            gap_budget=int(doc.get("gap_budget", 4)),
            gap_budget_per=int(doc.get("gap_budget_per", 1300)),
        )

    def to_json(self) -> str:
        return json.dumps({
            "rules": self.rules,
            "g2_threshold": self.g2_threshold,
            "g3_patterns": list(self.g3_patterns),
            "gap_budget": self.gap_budget,
            "gap_budget_per": self.gap_budget_per,
        }, ensure_ascii=False, indent=2)


DEFAULT_CONFIG = LintConfig()


def _tokens(text: str) -> list[str]:
    return re.findall(r"\w+", text.casefold())


def _fold(token: str) -> str:
    """Comparison form of a token: casefolded, diacritics stripped, al- dropped."""
    token = token.casefold()
    if token.startswith(_ARABIC_ARTICLE) and len(token) > 2:
        token = token[2:]
    return normalize_term(token, "loose").skeleton


def _strip_headword_prefix(gloss: str, own_terms: Collection[str]) -> str:
    """Drop an optional leading '<own lemma>:' headword echo."""
    head, sep, rest = gloss.partition(":")
    if sep and any(head.strip().casefold() == t.casefold() for t in own_terms):
        return rest.lstrip()
    return gloss


def _strip_articles(text: str) -> str:
    while True:
        m = re.match(r"\s*(\w+)", text)
        if m and m.group(1).casefold() in _ARTICLES:
            text = text[m.end():]
            continue
        return text.lstrip()


def _characteristic_tokens(gloss: str, own_terms: Collection[str]) -> set[str]:
    """Token set of a gloss minus articles, relative pronouns and the
    supertype head (the first remaining content token)."""
    toks = [_fold(t) for t in _tokens(_strip_headword_prefix(gloss, own_terms))]
    toks = [t for t in toks if t and t not in _ARTICLES and t not in _RELATIVE_PRONOUNS]
    return set(toks[1:])


def lint_gloss(concept: Concept, taxonomy: Taxonomy, store: OntologyStore,
               config: LintConfig = DEFAULT_CONFIG) -> list[Finding]:
    """Run the gloss-formulation rules on one concept.

    G1 (error): the gloss does not start with a lemma of the parent synset
    after article stripping.  G2 (warning): the gloss repeats the parent
    gloss's characteristic clause beyond the configured overlap ratio.
    G3 (warning): a narrative marker pattern matched.

    Roots are exempt from G1 and G2.  Raises :class:`UnknownParent` when the
    concept names a parent that does not resolve.
    """
    findings: list[Finding] = []
    gloss = concept.gloss or ""

    parent_id = taxonomy.parent_of.get(concept.id) if concept.id in taxonomy.nodes \
        else concept.parent
    parent = None
    if parent_id is not None:
        if parent_id not in store:
            raise UnknownParent(f"concept {concept.id} has unresolved parent {parent_id}")
        parent = store.concept(parent_id)

    if parent is not None and config.enabled("G1"):
        start = _strip_articles(_strip_headword_prefix(gloss, concept.terms))
        folded_start = _fold_prefix(start)
        ok = False
        for lemma in parent.terms:
            folded_lemma = _fold_prefix(_strip_articles(lemma))
            if folded_lemma and folded_start.startswith(folded_lemma):
                ok = True
                break
        if not ok:
            findings.append(Finding(
                "G1", "error", concept.id,
                "gloss does not start with a lemma of the parent synset",
                related=(parent.id,),
            ))

    if parent is not None and config.enabled("G2") and parent.gloss:
        parent_clause = _characteristic_tokens(parent.gloss, parent.terms)
        child_clause = _characteristic_tokens(gloss, concept.terms)
        if child_clause and parent_clause:
            ratio = len(child_clause & parent_clause) / len(child_clause)
            if ratio > config.g2_threshold:
                findings.append(Finding(
                    "G2", "warning", concept.id,
                    f"gloss repeats the supertype's characteristics "
                    f"(overlap {ratio:.2f} > {config.g2_threshold:.2f})",
                    related=(parent.id,),
                ))

    if config.enabled("G3"):
        for pattern in config.g3_patterns:
            m = re.search(pattern, gloss, flags=re.IGNORECASE)
            if m:
                findings.append(Finding(
                    "G3", "warning", concept.id,
                    f"narrative phrasing matched marker {pattern!r}",
                    span=m.span(),
                ))

    return findings


def _fold_prefix(text: str) -> str:
    return "".join(_fold(t) for t in _tokens(text))


def lint_synset_policy(concept: Concept, lemma_registry: Container | None,
                       config: LintConfig = DEFAULT_CONFIG) -> list[Finding]:
    """Lexical policy for ontology synsets.

    L1 (error): a sense term is absent from the lemma registry (skipped when
    no registry is plugged in).  L2 (error): a non-noun sense in an ontology
    synset; events are captured through their verbal nouns, never as verbs.
    L3 (warning): a gap-filler concept without a rationale note.
    """
    findings: list[Finding] = []
    for sense in concept.synset:
        if lemma_registry is not None and config.enabled("L1"):
            if (sense.term, sense.pos) not in lemma_registry and sense.term not in lemma_registry:
                findings.append(Finding(
                    "L1", "error", concept.id,
                    f"term {sense.term!r} is not a registered lemma",
                    related=(sense.sense_id,),
                ))
        if config.enabled("L2") and sense.pos != "noun":
            findings.append(Finding(
                "L2", "error", concept.id,
                f"sense {sense.term!r} has pos {sense.pos!r}; ontology synsets hold nouns only",
                related=(sense.sense_id,),
            ))
    if config.enabled("L3") and concept.gap_filler and not concept.profile.gap_rationale:
        findings.append(Finding(
            "L3", "warning", concept.id,
            "gap-filler concept has no rationale note in its profile",
        ))
    return findings


def lint_gap_budget(store: OntologyStore,
                    config: LintConfig = DEFAULT_CONFIG) -> Finding | None:
    """Warn when gap fillers exceed the configured budget, scaled to store size."""
    if not config.enabled("GapBudget"):
        return None
    total = len(store)
    gaps = sum(1 for c in store.concepts() if c.gap_filler)
    allowed = config.gap_budget * total / config.gap_budget_per if total else 0.0
    if gaps > allowed:
        return Finding(
            "GapBudgetExceeded", "warning", None,
            f"{gaps} gap fillers exceed the budget of {allowed:.1f} "
            f"({config.gap_budget} per {config.gap_budget_per} concepts)",
        )
    return None


def lint_store(store: OntologyStore, taxonomy: Taxonomy | None = None,
               config: LintConfig = DEFAULT_CONFIG,
               lemma_registry: Container | None = None) -> list[Finding]:
    """Run every gloss and synset lint across a store snapshot."""
    taxonomy = taxonomy or Taxonomy.from_store(store)
    findings: list[Finding] = []
    for concept in store.concepts():
        try:
            findings.extend(lint_gloss(concept, taxonomy, store, config))
        except UnknownParent:
            pass  # surfaced by record validation as DanglingParent
        findings.extend(lint_synset_policy(concept, lemma_registry, config))
    budget = lint_gap_budget(store, config)
    if budget:
        findings.append(budget)
    return findings
