"""Shared fixtures: small stores and the annotated-synset sample document."""

from __future__ import annotations

from pathlib import Path

import pytest


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    rows = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if "test_acceptance" in report.nodeid and report.when == "call":
                rows.append((report.nodeid.split("::")[-1], outcome.upper()))
    if rows:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, outcome in sorted(rows):
            terminalreporter.write_line(f"{outcome:<6} {name}")

from ontolex.fixtures import top_levels_labels, top_levels_store
from ontolex.model import Concept, Individual, OntologicalProfile, Sense, StoreBuilder

DATA_DIR = Path(__file__).parent / "data"

MSA = {"area": ":MostArabCountries", "era": ":Modern", "lexicalization_type": ":MSA"}


def heartburn_concept(parent: int | None = None) -> Concept:
    """The annotated heartburn synset: two formal terms plus one dialectal."""
    return Concept(
        id=291234,
        gloss="A burning discomfort felt behind the breastbone.",
        synset=(
            Sense(sense_id=26754, term="حُمُوضَة", **MSA),
            Sense(sense_id=26747, term="حُرْقَة", **MSA),
            Sense(sense_id=26249, term="حَزَاز", area=":Palestine&Jordan",
                  era=":Modern", lexicalization_type=":DA"),
        ),
        area=":MostArabCountries",
        era=":Modern",
        parent=parent,
    )


def sample_store():
    """Two concepts and one individual; exercises every record field."""
    b = StoreBuilder()
    b.add_concept(Concept(
        id=293198,
        gloss="A felt bodily condition.",
        example_sentence="مثال",
        synset=(Sense(sense_id=26001, term="حَالَة جسدية", **MSA),),
        area=":MostArabCountries",
        era=":Modern",
        status="well-investigated",
        profile=OntologicalProfile(
            distinguishing_characteristics="Felt by the subject rather than observed.",
            example_instances=("a headache", "a chill"),
            identity_criteria="Same bearer, same span of time.",
            rigidity="rigid",
            formal_axioms=("disjoint(293198, 291000)",),
            benchmark_level="commonsense",
        ),
    ))
    b.add_concept(heartburn_concept(parent=293198))
    b.add_individual(Individual(
        id=500001,
        names=(Sense(sense_id=26900, term="حَالَة فلان", **MSA),),
        instance_of=293198,
    ))
    return b.build()


@pytest.fixture
def store():
    return sample_store()


@pytest.fixture(scope="session")
def top_store():
    return top_levels_store()


@pytest.fixture(scope="session")
def top_labels(top_store):
    return top_levels_labels(top_store)
