"""Shipped starter taxonomy: the upper levels as data, not logic.

The hierarchy groups everything under a single ``entity`` root: objects
(physical and social), occurrents (events and time), dependent entities,
abstracts, and information entities, with one level of subtypes under each.
Arabic lemmas carry area/era annotations; the English lemma comes first so
reports read naturally.

``top_levels_store()`` is the source of truth; ``data/top_levels.xml`` is
its canonical export (kept in sync by a test).
"""

from __future__ import annotations

from importlib import resources

from .model import Concept, Individual, OntologicalProfile, OntologyStore, Sense, StoreBuilder

_MSA = {"area": ":MostArabCountries", "era": ":Modern", "lexicalization_type": ":MSA"}

# id, parent id, english lemma, arabic lemma, gloss, rigidity
_TOP_LEVELS: tuple[tuple[int, int | None, str, str, str, str], ...] = (
    (1, None, "entity", "كَائِن",
     "Anything that can be said to exist or to happen.", "rigid"),
    (2, 1, "object", "مَوْجُود",
     "An entity that is wholly present at any moment of its life and keeps "
     "its identity through time.", "rigid"),
    (3, 2, "physical object", "مَوْجُود مَادِّيّ",
     "An object that occupies a region of space and can be detected by the "
     "senses or by instruments.", "rigid"),
    (4, 2, "social object", "مَوْجُود اِجْتِمَاعِيّ",
     "An object whose existence rests on recognition by people or "
     "institutions rather than on physical presence.", "rigid"),
    (5, 1, "occurrent", "سَيْرُورَة",
     "An entity that unfolds in time rather than persisting through it.", "rigid"),
    (6, 5, "event", "حَدَث",
     "An occurrent that takes place and consumes time, carried by some "
     "physical bearer.", "rigid"),
    (7, 5, "time", "زَمَن",
     "An occurrent that is a region or portion of the timeline itself.", "rigid"),
    (8, 1, "dependent entity", "مَنُوط",
     "An entity whose existence requires some other entity to exist.", "rigid"),
    (9, 1, "abstract", "مُجَرَّد",
     "An entity that exists only in mind, with no location in space or "
     "time and no measurable extent.", "rigid"),
    (10, 1, "information entity", "تَعْبِير",
     "An entity that represents other entities and bears content "
     "independently of any particular carrier.", "rigid"),
    (11, 3, "organism", "كَائِن حَيّ",
     "A physical object that lives by metabolism and can reproduce itself "
     "independently.", "rigid"),
    (12, 3, "anatomical structure", "بِنْيَة تَشْرِيحِيَّة",
     "A physical object that is a structural part of an organism's body.", "rigid"),
    (13, 3, "virus", "فَيْرُوس",
     "A physical object made of genetic material in a protein coat, able "
     "to replicate only inside the cells of an organism.", "rigid"),
    (14, 3, "geographical region", "مِنْطَقَة جُغْرَافِيَّة",
     "A physical object that is a land or water portion of a planetary "
     "surface.", "rigid"),
    (15, 3, "astronomical body", "جِرْم سَمَاوِيّ",
     "A physical object that exists naturally in outer space.", "rigid"),
    (16, 3, "material", "مَادَّة",
     "A physical object considered as stuff rather than as a bounded "
     "thing.", "rigid"),
    (17, 4, "place", "مَكَان",
     "A social object that conveys a geographical region realized by the "
     "activities carried out in it or the objects occupying it.", "rigid"),
    (18, 4, "collection", "مَجْمُوعَة",
     "A social object consisting of a plurality of objects realized as one "
     "whole.", "rigid"),
    (19, 4, "social agent", "فَاعِل اِجْتِمَاعِيّ",
     "A social object whose identity rests on its capability of performing "
     "actions, such as a committee or a corporation.", "rigid"),
    (20, 6, "action", "فِعْل",
     "An event that is non-cumulative and has peak moments.", "rigid"),
    (21, 6, "process", "عَمَلِيَّة",
     "An event that is cumulative: the sum of two of its instances is "
     "again an instance.", "rigid"),
    (22, 7, "interval", "فَتْرَة",
     "A time with starting and ending points whose length follows an "
     "astronomical cycle.", "rigid"),
    (23, 7, "duration", "مُدَّة",
     "A time whose length depends on the life of some object or "
     "non-astronomical event.", "rigid"),
    (24, 7, "moment", "لَحْظَة",
     "A time conventionally treated as a single point.", "rigid"),
    (25, 8, "role", "دَوْر",
     "A dependent entity describing an activity an object optionally "
     "carries out for a purpose.", "anti-rigid"),
    (26, 8, "disposition", "نَزْعَة",
     "A dependent entity describing a non-optional tendency of its bearer "
     "toward something.", "rigid"),
    (27, 8, "capability", "قُدْرَة",
     "A dependent entity describing what its bearer is able to do.", "rigid"),
    (28, 8, "state", "حَالَة",
     "A dependent entity describing the condition of other entities under "
     "certain circumstances.", "anti-rigid"),
    (29, 8, "quality", "صِفَة",
     "A dependent entity inhering in another entity to describe and "
     "distinguish it.", "rigid"),
    (30, 9, "quantity", "كَمِّيَّة",
     "An abstract that is a value amount, such as a number of units.", "rigid"),
    (31, 9, "attribute", "خَاصِّيَّة",
     "An abstract that is a non-numeric value of a quality.", "rigid"),
    (32, 9, "formal entity", "كِيَان صُورِيّ",
     "An abstract studied by formal sciences, such as a set or a number.", "rigid"),
    (33, 9, "proposition", "قَضِيَّة",
     "An abstract that bears a truth value.", "rigid"),
    (34, 9, "description", "وَصْف",
     "An abstract that characterizes something without bearing a truth "
     "value by itself.", "rigid"),
    (35, 10, "information object", "مُحْتَوًى",
     "An information entity that is content itself, independent of how it "
     "is realized.", "rigid"),
    (36, 10, "information realization", "تَجْسِيد المُحْتَوَى",
     "An information entity that concretely carries some content, such as "
     "a printed copy.", "rigid"),
)

_RELATIONS: dict[int, tuple[tuple[str, int], ...]] = {
    11: (("HasPart", 12),),
    12: (("PartOf", 11),),
}

_INDIVIDUALS: tuple[tuple[int, str, str, int], ...] = (
    # id, english name, arabic name, instance_of
    (401, "Earth", "الأَرْض", 15),
    (402, "Mediterranean Sea", "البَحْر الأَبْيَض المُتَوَسِّط", 14),
)


def top_levels_store() -> OntologyStore:
    """Build the starter snapshot programmatically."""
    builder = StoreBuilder()
    next_sense = 1001
    for cid, parent, en, ar, gloss, rigidity in _TOP_LEVELS:
        senses = (
            Sense(sense_id=next_sense, term=en),
            Sense(sense_id=next_sense + 1, term=ar, **_MSA),
        )
        next_sense += 2
        builder.add_concept(Concept(
            id=cid,
            gloss=gloss,
            synset=senses,
            area=":MostArabCountries",
            era=":Modern",
            status="well-investigated",
            parent=parent,
            relations=_RELATIONS.get(cid, ()),
            profile=OntologicalProfile(
                distinguishing_characteristics=gloss,
                rigidity=rigidity,
                benchmark_level="expert",
            ),
        ))
    for iid, en, ar, instance_of in _INDIVIDUALS:
        builder.add_individual(Individual(
            id=iid,
            names=(
                Sense(sense_id=next_sense, term=en),
                Sense(sense_id=next_sense + 1, term=ar, **_MSA),
            ),
            instance_of=instance_of,
        ))
        next_sense += 2
    return builder.build()


def top_levels_labels(store: OntologyStore | None = None) -> dict[int, str]:
    """Concept id -> first (English) lemma, for report display."""
    store = store or top_levels_store()
    return {c.id: c.terms[0] if c.terms else str(c.id) for c in store.concepts()}


def top_levels_xml() -> bytes:
    """The canonical export shipped with the package."""
    return resources.files("ontolex").joinpath("data/top_levels.xml").read_bytes()
