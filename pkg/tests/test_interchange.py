"""Interchange round-trips, raw-snippet compatibility, and error reporting."""

from __future__ import annotations

import random

import pytest

from ontolex.errors import DanglingReference, DuplicateId, ParseError
from ontolex.interchange import export_interchange, import_interchange
from ontolex.model import Concept, Individual, OntologicalProfile, Sense, StoreBuilder

from conftest import DATA_DIR, sample_store

RAW_SNIPPET = """
<Ontology>
<concept conceptID=":293198" area=":MostArabCountries" era=":Modern">
</concept>
<Concept conceptID=":291234" area=":MostArabCountries" era=":Modern">
<Synset>
<Sense ID=":26754" Term="حُمُوضَة" area=":MostArabCountries" era=":Modern" lexicalizationType=":MSA"/>
<Sense ID=":26747" Term="حُرْقَة" area=":MostArabCountries" era=":Modern" lexicalizationType=":MSA"/>
<Sense ID=":26249" Term="حَزَاز" area=":Palestine&amp;Jordan" era=":Modern" lexicalizationType=":DA"/>
</Synset>
</Concept>
</Ontology>
"""


class TestImport:
    def test_raw_snippet_parses_with_attributes_verbatim(self):
        store = import_interchange(RAW_SNIPPET)
        concept = store.concept(291234)
        assert len(concept.synset) == 3
        assert concept.area == ":MostArabCountries"
        assert concept.era == ":Modern"
        terms = {s.term for s in concept.synset}
        assert terms == {"حُمُوضَة", "حُرْقَة", "حَزَاز"}
        dialectal = store.concept(291234).synset[0]
        assert dialectal.area == ":Palestine&Jordan"  # ampersand round-trips

    def test_empty_document(self):
        store = import_interchange("<Ontology/>")
        assert len(store) == 0
        assert export_interchange(store).endswith(b"<Ontology />\n")

    def test_dangling_parent_rejected(self):
        doc = '<Ontology><Concept conceptID=":1" parent=":99"/></Ontology>'
        with pytest.raises(DanglingReference):
            import_interchange(doc)

    def test_dangling_instance_of_rejected(self):
        doc = '<Ontology><Individual ID=":7" instanceOf=":99"/></Ontology>'
        with pytest.raises(DanglingReference):
            import_interchange(doc)

    def test_duplicate_concept_id_rejected(self):
        doc = ('<Ontology><Concept conceptID=":1"/>'
               '<Concept conceptID=":1"/></Ontology>')
        with pytest.raises(DuplicateId):
            import_interchange(doc)

    def test_shared_sense_id_across_concepts_flagged(self):
        doc = ('<Ontology>'
               '<Concept conceptID=":1"><Synset><Sense ID=":5" Term="a"/></Synset></Concept>'
               '<Concept conceptID=":2"><Synset><Sense ID=":5" Term="b"/></Synset></Concept>'
               '</Ontology>')
        with pytest.raises(DuplicateId):
            import_interchange(doc)

    def test_syntax_error_reports_position(self):
        with pytest.raises(ParseError) as err:
            import_interchange("<Ontology><Concept conceptID=':1'>")
        assert err.value.position is not None

    def test_bad_id_rejected(self):
        with pytest.raises(ParseError):
            import_interchange('<Ontology><Concept conceptID=":zero"/></Ontology>')
        with pytest.raises(ParseError):
            import_interchange('<Ontology><Concept conceptID=":0"/></Ontology>')


class TestRoundTrip:
    def test_golden_fixture_bytes_stable(self):
        golden = (DATA_DIR / "canonical_fixture.xml").read_bytes()
        assert export_interchange(import_interchange(golden)) == golden

    def test_export_import_is_identity_on_snapshots(self, store):
        again = import_interchange(export_interchange(store))
        assert list(again.concepts()) == list(store.concepts())
        assert list(again.individuals()) == list(store.individuals())

    def test_two_exports_identical(self, store):
        assert export_interchange(store) == export_interchange(store)

    def test_random_snapshot_structural_round_trip(self):
        store = random_snapshot(random.Random(77), concepts=300)
        again = import_interchange(export_interchange(store))
        assert list(again.concepts()) == list(store.concepts())
        assert list(again.individuals()) == list(store.individuals())

    def test_profile_and_relations_round_trip(self):
        b = StoreBuilder()
        b.add_concept(Concept(id=1, synset=(Sense(sense_id=1, term="t"),)))
        b.add_concept(Concept(
            id=2,
            gloss="g",
            synset=(Sense(sense_id=2, term="u", pos="verb"),),
            parent=1,
            gap_filler=True,
            relations=(("Similar", 1), ("PartOf", 1)),
            profile=OntologicalProfile(
                distinguishing_characteristics="d",
                example_instances=("one", "two"),
                identity_criteria="i",
                rigidity="anti-rigid",
                formal_axioms=("ax1",),
                benchmark_level="scientific",
                gap_rationale="keeps the hierarchy tidy",
            ),
        ))
        store = b.build()
        again = import_interchange(export_interchange(store))
        assert again.concept(2) == store.concept(2)


def random_snapshot(rng: random.Random, concepts: int):
    """Random forest with annotated senses, relations, and individuals."""
    b = StoreBuilder()
    sid = 1
    for cid in range(1, concepts + 1):
        n_senses = rng.randint(1, 3)
        senses = []
        for k in range(n_senses):
            senses.append(Sense(
                sense_id=sid,
                term=f"term{cid}_{k}",
                area=rng.choice(["", ":MostArabCountries", ":Egypt"]),
                era=rng.choice(["", ":Modern", ":Classic"]),
                lexicalization_type=rng.choice(["", ":MSA", ":DA"]),
                pos=rng.choice(["noun", "noun", "other"]),
            ))
            sid += 1
        parent = rng.randint(1, cid - 1) if cid > 1 and rng.random() < 0.9 else None
        relations = []
        if cid > 2 and rng.random() < 0.2:
            relations.append((rng.choice(["Similar", "PartOf", "HasPart"]),
                              rng.randint(1, cid - 1)))
        profile = OntologicalProfile()
        if rng.random() < 0.3:
            profile = OntologicalProfile(
                distinguishing_characteristics=f"traits of {cid}",
                rigidity=rng.choice(["rigid", "anti-rigid"]),
            )
        b.add_concept(Concept(
            id=cid,
            gloss=f"gloss {cid}" if rng.random() < 0.8 else "",
            example_sentence=f"example {cid}" if rng.random() < 0.3 else None,
            synset=tuple(senses),
            area=rng.choice(["", ":MostArabCountries"]),
            era=rng.choice(["", ":Modern"]),
            status="well-investigated" if profile.rigidity != "unspecified" else "partial",
            parent=parent,
            relations=tuple(relations),
            profile=profile,
        ))
    for i in range(concepts + 1, concepts + 1 + concepts // 10):
        b.add_individual(Individual(
            id=i,
            names=(Sense(sense_id=sid, term=f"name{i}"),),
            instance_of=rng.randint(1, concepts),
        ))
        sid += 1
    return b.build()
