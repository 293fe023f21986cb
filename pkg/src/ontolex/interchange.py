"""UTF-8 XML interchange format for ontology snapshots.

The element vocabulary follows the annotated-synset layout: Concept elements
carry conceptID/area/era attributes with their leading ":" preserved
verbatim, Synset wraps Sense elements, and optional extension elements
(Gloss, Example, Relation, Profile, Individual) cover the rest of the
metamodel.  Every extension attribute is optional, so minimal raw snippets
still parse.

Export is canonical: concepts sorted by id, senses by sense id, fixed
attribute order, defaults omitted.  ``import_interchange(export_interchange(s))``
reproduces the snapshot exactly and export is byte-stable.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .errors import DanglingReference, ParseError, UnknownId
from .model import (
    Concept,
    Individual,
    OntologicalProfile,
    OntologyStore,
    Sense,
    StoreBuilder,
)


def _parse_id(value: str, what: str) -> int:
    raw = value[1:] if value.startswith(":") else value
    try:
        parsed = int(raw)
    except ValueError:
        raise ParseError(f"{what} {value!r} is not an integer id") from None
    if parsed <= 0:
        raise ParseError(f"{what} {value!r} must be positive")
    return parsed


def _format_id(value: int) -> str:
    return f":{value}"


def _parse_sense(elem: ET.Element) -> Sense:
    attrs = elem.attrib
    if "ID" not in attrs:
        raise ParseError("Sense element lacks an ID attribute")
    if "Term" not in attrs:
        raise ParseError("Sense element lacks a Term attribute")
    return Sense(
        sense_id=_parse_id(attrs["ID"], "sense ID"),
        term=attrs["Term"],
        area=attrs.get("area", ""),
        era=attrs.get("era", ""),
        lexicalization_type=attrs.get("lexicalizationType", ""),
        pos=attrs.get("pos", "noun"),
    )


def _parse_profile(elem: ET.Element) -> OntologicalProfile:
    instances: list[str] = []
    axioms: list[str] = []
    fields = {"DistinguishingCharacteristics": "", "IdentityCriteria": "",
              "GapRationale": ""}
    for child in elem:
        tag = child.tag
        text = (child.text or "").strip()
        if tag == "ExampleInstance":
            instances.append(text)
        elif tag == "FormalAxiom":
            axioms.append(text)
        elif tag in fields:
            fields[tag] = text
        else:
            raise ParseError(f"unknown Profile child element {tag!r}")
    return OntologicalProfile(
        distinguishing_characteristics=fields["DistinguishingCharacteristics"],
        example_instances=tuple(instances),
        identity_criteria=fields["IdentityCriteria"],
        rigidity=elem.get("rigidity", "unspecified"),
        formal_axioms=tuple(axioms),
        benchmark_level=elem.get("benchmarkLevel", "unspecified"),
        gap_rationale=fields["GapRationale"],
    )


def _parse_concept(elem: ET.Element) -> Concept:
    attrs = elem.attrib
    if "conceptID" not in attrs:
        raise ParseError("Concept element lacks a conceptID attribute")
    cid = _parse_id(attrs["conceptID"], "conceptID")
    gloss = ""
    example: str | None = None
    senses: list[Sense] = []
    relations: list[tuple[str, int]] = []
    profile = OntologicalProfile()
    for child in elem:
        tag = child.tag.lower()
        if tag == "gloss":
            gloss = (child.text or "").strip()
        elif tag == "example":
            example = (child.text or "").strip()
        elif tag == "synset":
            for sense_elem in child:
                if sense_elem.tag.lower() != "sense":
                    raise ParseError(f"unexpected element {sense_elem.tag!r} inside Synset")
                senses.append(_parse_sense(sense_elem))
        elif tag == "relation":
            rel_type = child.get("type")
            target = child.get("target")
            if not rel_type or not target:
                raise ParseError(f"Relation under concept {cid} needs type and target")
            relations.append((rel_type, _parse_id(target, "relation target")))
        elif tag == "profile":
            profile = _parse_profile(child)
        else:
            raise ParseError(f"unknown element {child.tag!r} under concept {cid}")
    parent_attr = attrs.get("parent")
    return Concept(
        id=cid,
        gloss=gloss,
        example_sentence=example,
        synset=tuple(senses),
        area=attrs.get("area", ""),
        era=attrs.get("era", ""),
        status=attrs.get("status", "partial"),
        gap_filler=attrs.get("gapFiller", "false") == "true",
        parent=_parse_id(parent_attr, "parent") if parent_attr else None,
        relations=tuple(relations),
        profile=profile,
    )


def _parse_individual(elem: ET.Element) -> Individual:
    attrs = elem.attrib
    if "ID" not in attrs or "instanceOf" not in attrs:
        raise ParseError("Individual element needs ID and instanceOf attributes")
    names = []
    for child in elem:
        if child.tag.lower() != "sense":
            raise ParseError(f"unexpected element {child.tag!r} inside Individual")
        names.append(_parse_sense(child))
    return Individual(
        id=_parse_id(attrs["ID"], "individual ID"),
        names=tuple(names),
        instance_of=_parse_id(attrs["instanceOf"], "instanceOf"),
    )


def import_interchange(data: bytes | str) -> OntologyStore:
    """Parse an interchange document into a store snapshot.

    Raises :class:`ParseError` (with position for syntax errors),
    :class:`~ontolex.errors.DuplicateId` on id collisions, and
    :class:`DanglingReference` when a parent or instanceOf id is absent
    from the document.
    """
    try:
        root = ET.fromstring(data)
    except ET.ParseError as e:
        reason = str(e).split(":")[0]
        raise ParseError(f"malformed XML: {reason}", e.position) from e
    if root.tag.lower() != "ontology":
        raise ParseError(f"root element must be Ontology, got {root.tag!r}")

    builder = StoreBuilder()
    individuals: list[Individual] = []
    for elem in root:
        tag = elem.tag.lower()
        if tag == "concept":
            builder.add_concept(_parse_concept(elem))
        elif tag == "individual":
            individuals.append(_parse_individual(elem))
        else:
            raise ParseError(f"unknown top-level element {elem.tag!r}")
    for ind in individuals:
        builder.add_individual(ind)

    try:
        store = builder.build()
    except UnknownId as e:
        raise DanglingReference(str(e)) from e
    for concept in store.concepts():
        if concept.parent is not None and concept.parent not in store:
            raise DanglingReference(
                f"concept {concept.id} references missing parent {concept.parent}"
            )
    return store


def _sense_element(parent: ET.Element, sense: Sense) -> None:
    attrs = {"ID": _format_id(sense.sense_id), "Term": sense.term}
    if sense.area:
        attrs["area"] = sense.area
    if sense.era:
        attrs["era"] = sense.era
    if sense.lexicalization_type:
        attrs["lexicalizationType"] = sense.lexicalization_type
    if sense.pos != "noun":
        attrs["pos"] = sense.pos
    ET.SubElement(parent, "Sense", attrs)


def _profile_element(parent: ET.Element, profile: OntologicalProfile) -> None:
    attrs = {}
    if profile.rigidity != "unspecified":
        attrs["rigidity"] = profile.rigidity
    if profile.benchmark_level != "unspecified":
        attrs["benchmarkLevel"] = profile.benchmark_level
    elem = ET.SubElement(parent, "Profile", attrs)
    if profile.distinguishing_characteristics:
        ET.SubElement(elem, "DistinguishingCharacteristics").text = \
            profile.distinguishing_characteristics
    for instance in profile.example_instances:
        ET.SubElement(elem, "ExampleInstance").text = instance
    if profile.identity_criteria:
        ET.SubElement(elem, "IdentityCriteria").text = profile.identity_criteria
    for axiom in profile.formal_axioms:
        ET.SubElement(elem, "FormalAxiom").text = axiom
    if profile.gap_rationale:
        ET.SubElement(elem, "GapRationale").text = profile.gap_rationale


def export_interchange(store: OntologyStore) -> bytes:
    """Serialize a snapshot to canonical interchange bytes (deterministic)."""
    root = ET.Element("Ontology")
    for concept in store.concepts():
        attrs = {"conceptID": _format_id(concept.id)}
        if concept.area:
            attrs["area"] = concept.area
        if concept.era:
            attrs["era"] = concept.era
        if concept.status != "partial":
            attrs["status"] = concept.status
        if concept.gap_filler:
            attrs["gapFiller"] = "true"
        if concept.parent is not None:
            attrs["parent"] = _format_id(concept.parent)
        elem = ET.SubElement(root, "Concept", attrs)
        if concept.gloss:
            ET.SubElement(elem, "Gloss").text = concept.gloss
        if concept.example_sentence is not None:
            ET.SubElement(elem, "Example").text = concept.example_sentence
        if concept.synset:
            synset = ET.SubElement(elem, "Synset")
            for sense in concept.synset:
                _sense_element(synset, sense)
        for rel_type, target in concept.relations:
            ET.SubElement(elem, "Relation",
                          {"type": rel_type, "target": _format_id(target)})
        if not concept.profile.is_default():
            _profile_element(elem, concept.profile)
    for ind in store.individuals():
        elem = ET.SubElement(root, "Individual",
                             {"ID": _format_id(ind.id),
                              "instanceOf": _format_id(ind.instance_of)})
        for sense in ind.names:
            _sense_element(elem, sense)
    ET.indent(root, space="  ")
    return ET.tostring(root, encoding="utf-8", xml_declaration=True) + b"\n"
