"""Acceptance suite: every headline behavior at its stated tolerance.

Each test is one criterion; the terminal summary prints one pass/fail line
per criterion.  Timed criteria assert their wall-clock budget.
"""

from __future__ import annotations

import random
import time
from itertools import combinations, product

import pytest

from ontolex.errors import CycleError, MultipleParentError
from ontolex.fixtures import top_levels_labels, top_levels_store
from ontolex.glosslint import lint_gloss
from ontolex.interchange import export_interchange, import_interchange
from ontolex.mapping import (
    EntityRef,
    MappingCorrespondence,
    MappingStore,
    agreement_stats,
    combined_agreement,
    coverage_report,
    paired_relation_histogram,
)
from ontolex.model import Concept, Sense, StoreBuilder
from ontolex.normalize import DIACRITICS, FATHA, SUKUN
from ontolex.search import build_index, query
from ontolex.semantics import WorldModel, concepts_identical, subsumes
from ontolex.service import Route, resolve_route
from ontolex.taxonomy import (
    ForeignHierarchy,
    Taxonomy,
    ancestors,
    audit_redundant_edges,
    set_parent,
)

from agreement_data import agreement_fixture
from conftest import DATA_DIR
from test_interchange import random_snapshot
from test_taxonomy import brute_force_surplus, random_dag, random_tree_edges

TABLE_ROWS = (
    # exact, partial, different, unmapped -> expected integer percentages
    ("A1 vs. A2", (784, 291, 481, 540), (50, 19, 31, 35), 69),
    ("A1 vs. Reference", (1175, 215, 390, 316), (66, 12, 22, 18), 78),
    ("A2 vs. Reference", (1218, 187, 305, 386), (71, 11, 18, 23), 82),
)


@pytest.fixture(scope="module")
def agreement_tables():
    tables = []
    for label, counts, _, _ in TABLE_ROWS:
        a, b, rules, universe = agreement_fixture(*counts)
        tables.append(agreement_stats(a, b, rules, universe, label=label))
    return tables


def test_agreement_table_reproduction(agreement_tables):
    start = time.perf_counter()
    for table, (_, counts, expected, _) in zip(agreement_tables, TABLE_ROWS):
        exact, partial, different, unmapped = counts
        assert (table.exact, table.partial, table.different) == (exact, partial, different)
        assert table.couldnt_map == unmapped
        got = (table.pct_exact, table.pct_partial, table.pct_different,
               table.pct_couldnt_map)
        assert got == expected
    assert time.perf_counter() - start < 1.0


def test_combined_agreement_values(agreement_tables):
    got = [combined_agreement(t) for t in agreement_tables]
    assert got == [row[3] for row in TABLE_ROWS]


def test_relation_histogram_totals():
    rows = (("SameAs", 11400), ("SubClassOf", 525), ("SuperClassOf", 525),
            ("PartOf", 50), ("HasPart", 50), ("InstanceOf", 385),
            ("Type", 385), ("Similar", 125))
    records = []
    serial = 0
    for relation, count in rows:
        for _ in range(count):
            serial += 1
            records.append(MappingCorrespondence(
                e1=EntityRef("lexnet", f"e{serial}"),
                e2=EntityRef("ontology", str(serial)),
                relation=relation, precision=90, confidence=90, annotator="A1"))
    hist = paired_relation_histogram(MappingStore.from_records(records))
    assert hist.counts == {
        "SameAs": 11400,
        "SubClassOf/SuperClassOf": 1050,
        "PartOf/HasPart": 100,
        "InstanceOf/Type": 770,
        "Similar": 125,
    }
    assert hist.total == 13445


def test_coverage_report_comprehensiveness():
    store = top_levels_store()
    taxonomy = Taxonomy.from_store(store)
    labels = top_levels_labels(store)
    leaves = sorted(taxonomy.leaves())
    records = []
    serial = 0

    def place(target: int, relation: str, count: int):
        nonlocal serial
        for _ in range(count):
            serial += 1
            records.append(MappingCorrespondence(
                e1=EntityRef("tarifat", f"d{serial:05d}"),
                e2=EntityRef("ontology", str(target)),
                relation=relation, precision=90, confidence=85, annotator="Reference"))

    for i in range(40):  # equivalents, spread over nodes
        place(leaves[i % len(leaves)] if i % 4 else 2, "SameAs", 1)
    for i in range(1615):  # under leaf nodes
        place(leaves[i % len(leaves)], "SubClassOf", 1)
    for node, count in ((3, 30), (6, 4), (8, 15), (9, 9), (10, 107), (4, 10)):
        place(node, "SubClassOf", count)  # under non-leaf nodes

    report = coverage_report(MappingStore.from_records(records), taxonomy,
                             total_considered=2100, excluded=270, labels=labels)
    assert report.mapped == 1830
    assert report.equivalent_total == 40
    assert report.under_leaf == 1615
    assert report.under_non_leaf == 175
    assert report.correctly_placed == 1655
    assert report.comprehensiveness == 90.4
    assert report.comprehensiveness_display == "90%"
    missing = report.labeled_missing_categories()
    named = {k: missing[k] for k in ("physical object", "event", "dependent entity",
                                     "abstract", "information entity")}
    assert named == {"physical object": 30, "event": 4, "dependent entity": 15,
                     "abstract": 9, "information entity": 107}
    # remaining placements sit under one further non-leaf so totals stay honest
    assert missing["social object"] == 10
    assert sum(missing.values()) == report.under_non_leaf


def test_semantics_oracle_equivalence():
    start = time.perf_counter()
    domain = ("a", "b", "c")
    subsets = [frozenset(s) for r in range(4) for s in combinations(domain, r)]
    worlds = ("w1", "w2")
    checked = 0
    for assignment in product(subsets, repeat=4):
        ext = {1: {"w1": assignment[0], "w2": assignment[1]},
               2: {"w1": assignment[2], "w2": assignment[3]}}
        m = WorldModel(frozenset(domain), worlds, ext)
        oracle_12 = all(ext[2][w] <= ext[1][w] for w in worlds)
        oracle_21 = all(ext[1][w] <= ext[2][w] for w in worlds)
        assert subsumes(1, 2, m) == oracle_12
        assert subsumes(2, 1, m) == oracle_21
        assert concepts_identical(1, 2, m) == (oracle_12 and oracle_21)
        checked += 1
    assert checked == 4096

    rng = random.Random(20240501)
    for _ in range(1000):
        d = [f"d{i}" for i in range(rng.randint(1, 4))]
        ws = [f"w{i}" for i in range(rng.randint(1, 3))]
        ext = {c: {w: frozenset(x for x in d if rng.random() < 0.5) for w in ws}
               for c in (1, 2, 3)}
        m = WorldModel(frozenset(d), tuple(ws), ext)
        assert subsumes(1, 1, m)  # reflexive
        if subsumes(1, 2, m) and subsumes(2, 3, m):
            assert subsumes(1, 3, m)  # transitive
        assert concepts_identical(1, 1, m)  # reflexive
        if concepts_identical(1, 2, m):
            assert concepts_identical(2, 1, m)  # symmetric
        if concepts_identical(1, 2, m) and concepts_identical(2, 3, m):
            assert concepts_identical(1, 3, m)  # transitive
        assert concepts_identical(1, 2, m) == (subsumes(1, 2, m) and subsumes(2, 1, m))
    assert time.perf_counter() - start < 30.0


def test_taxonomy_audits():
    start = time.perf_counter()
    fixture = ForeignHierarchy.from_edges([
        ("Reflate", "Inflate"), ("Inflate", "Change"), ("Reflate", "Change")])
    assert audit_redundant_edges(fixture) == {("Reflate", "Change")}

    rng = random.Random(20240502)
    for _ in range(500):
        nodes, edges = random_dag(rng, max_nodes=12)
        h = ForeignHierarchy(frozenset(nodes), frozenset(edges))
        assert audit_redundant_edges(h) == brute_force_surplus(nodes, edges)

    for _ in range(50):
        n = rng.randint(3, 30)
        t = Taxonomy.from_edges(nodes=range(n), edges=random_tree_edges(rng, n))
        for node in range(1, n):
            chain = ancestors(node, t)
            for anc in chain:
                with pytest.raises(CycleError):
                    set_parent(anc, node, t, reparent=True)
            current = t.parent_of[node]
            other = next((c for c in range(n) if c not in chain + [node, current]), None)
            if other is not None:
                with pytest.raises(MultipleParentError):
                    set_parent(node, other, t)
    assert time.perf_counter() - start < 10.0


def test_gloss_lint_narrative_vs_propositional():
    b = StoreBuilder()
    b.add_concept(Concept(
        id=1,
        gloss="An entity that is wholly and independently present in time, and "
              "is recognized either for its concrete or social existence",
        synset=(Sense(sense_id=1, term="object"),),
    ))
    b.add_concept(Concept(
        id=2,
        gloss="An object is social if it can be understood and recognized by "
              "people in a social system that exists; social objects are also "
              "those can be represented by physical objects",
        synset=(Sense(sense_id=2, term="social object"),),
        parent=1,
    ))
    b.add_concept(Concept(
        id=3,
        gloss="An object that is recognized for its social existence, and can "
              "be represented by physical objects",
        synset=(Sense(sense_id=3, term="social object (propositional)"),),
        parent=1,
    ))
    b.add_concept(Concept(
        id=4,
        gloss="An object that occupies space, and is recognized by senses or "
              "measuring tools",
        synset=(Sense(sense_id=4, term="physical object"),),
        parent=1,
    ))
    store = b.build()
    t = Taxonomy.from_store(store)

    narrative = lint_gloss(store.concept(2), t, store)
    assert any(f.rule_id == "G3" for f in narrative)
    propositional = lint_gloss(store.concept(3), t, store)
    assert propositional == []
    physical = lint_gloss(store.concept(4), t, store)
    assert all(f.rule_id != "G1" for f in physical)


VOWELS3 = [FATHA, "ُ", "ِ"]  # fatha, damma, kasra
ALL_VOWELS = VOWELS3 + [SUKUN]
LETTERS = "ابتجحدرزسشصطعفقكلمنهوي"


def _acceptance_terms(rng: random.Random, count: int) -> list[str]:
    """First letter always carries one of three vowels; sukun never first."""
    terms: set[str] = set()
    while len(terms) < count:
        length = rng.randint(3, 5)
        word = [rng.choice(LETTERS), rng.choice(VOWELS3)]
        for _ in range(length - 1):
            word.append(rng.choice(LETTERS))
            if rng.random() < 0.7:
                word.append(rng.choice(ALL_VOWELS))
        terms.add("".join(word))
    return sorted(terms)


def test_search_properties():
    rng = random.Random(20240503)
    terms = _acceptance_terms(rng, 1000)
    b = StoreBuilder()
    for i, term in enumerate(terms, start=1):
        b.add_concept(Concept(id=i, synset=(Sense(sense_id=i, term=term),)))
    index = build_index(b.build())

    # self-match holds for every stored term
    matched = 0
    for term in terms:
        hits = query(term, index)
        if any(h.entry.term == term for h in hits):
            matched += 1
    assert matched == len(terms)

    # stripping diacritics one at a time never shrinks the result set
    mutations = 0
    while mutations < 10000:
        current = rng.choice(terms)
        results = {h.sense.sense_id for h in query(current, index)}
        while any(ch in DIACRITICS for ch in current) and mutations < 10000:
            positions = [i for i, ch in enumerate(current) if ch in DIACRITICS]
            drop = rng.choice(positions)
            current = current[:drop] + current[drop + 1:]
            widened = {h.sense.sense_id for h in query(current, index)}
            assert results <= widened
            results = widened
            mutations += 1

    # a sukun on the first letter conflicts with every stored mark there
    for term in rng.sample(terms, 200):
        conflicted = term[0] + SUKUN + term[2:]
        assert query(conflicted, index) == []


def test_interchange_round_trip():
    start = time.perf_counter()
    golden = (DATA_DIR / "canonical_fixture.xml").read_bytes()
    assert export_interchange(import_interchange(golden)) == golden

    snapshot = random_snapshot(random.Random(20240504), concepts=5000)
    again = import_interchange(export_interchange(snapshot))
    assert list(again.concepts()) == list(snapshot.concepts())
    assert list(again.individuals()) == list(snapshot.individuals())
    assert time.perf_counter() - start < 5.0


def test_route_scheme():
    examples = {
        "/concept/293254": Route("ConceptById", concept_id=293254),
        "/concept/instances/293121": Route("RelationQuery", relation="instances",
                                           concept_id=293121),
        "/concept/virus": Route("TermLookup", term="virus"),
    }
    for path, expected in examples.items():
        route = resolve_route(path)
        assert route == expected
        assert route.path == path
    profile = resolve_route("/concept/334000112/profile")
    assert profile == Route("Profile", concept_id=334000112)
    assert profile.path == "/concept/334000112/profile"
