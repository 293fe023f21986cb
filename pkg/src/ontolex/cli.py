"""Command-line interface.

Exit codes: 0 = clean, 1 = findings present, 2 = hard error.
Service configuration may come from ONTOLEX_ADDR / ONTOLEX_DOMAIN.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import glosslint, interchange, mapping, semantics, service, taxonomy
from .errors import OntolexError
from .lexicons import LexiconRegistry
from .model import Finding, OntologyStore, validate_concept_record
from .search import build_index, query as search_query


def _load_store(path: str) -> OntologyStore:
    return interchange.import_interchange(Path(path).read_bytes())


def _load_lexicons(paths: list[str] | None) -> LexiconRegistry | None:
    if not paths:
        return None
    registry = LexiconRegistry()
    for p in paths:
        registry.load_tsv(Path(p))
    return registry


def _print_findings(findings: list[Finding]) -> int:
    for f in findings:
        print(f)
    print(f"{len(findings)} finding(s)")
    return 1 if findings else 0


def cmd_import(args) -> int:
    store = _load_store(args.input)
    registry = _load_lexicons(args.lexicons)
    print(f"imported {len(store)} concepts, "
          f"{sum(1 for _ in store.individuals())} individuals, "
          f"{sum(1 for _ in store.senses())} senses"
          + (f", {len(registry)} lexicon entries" if registry else ""))
    if args.output:
        Path(args.output).write_bytes(interchange.export_interchange(store))
        print(f"wrote canonical form to {args.output}")
    return 0


def cmd_export(args) -> int:
    data = interchange.export_interchange(_load_store(args.input))
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
    return 0


def cmd_validate(args) -> int:
    store = _load_store(args.input)
    config = glosslint.LintConfig.from_json(Path(args.config)) if args.config \
        else glosslint.DEFAULT_CONFIG
    registry = None
    if args.lemmas:
        registry = set(Path(args.lemmas).read_text(encoding="utf-8").split())
    findings: list[Finding] = []
    for concept in store.concepts():
        findings.extend(validate_concept_record(concept, store))
    t = taxonomy.Taxonomy.from_store(store)
    profiles = {c.id: c.profile for c in store.concepts()}
    findings.extend(taxonomy.check_rigidity(t, profiles))
    findings.extend(glosslint.lint_store(store, t, config, registry))
    return _print_findings(findings)


def cmd_check_model(args) -> int:
    store = _load_store(args.input)
    model = semantics.WorldModel.from_json(Path(args.model))
    t = taxonomy.Taxonomy.from_store(store)
    return _print_findings(semantics.check_taxonomy(model, t))


def cmd_map_add(args) -> int:
    path = Path(args.file)
    store = mapping.load_mappings_tsv(path) if path.exists() else mapping.MappingStore()
    record = mapping.MappingCorrespondence(
        e1=mapping.EntityRef(*_split_ref(args.e1)),
        e2=mapping.EntityRef(*_split_ref(args.e2)),
        relation=args.relation,
        precision=args.precision,
        confidence=args.confidence,
        annotator=args.annotator,
        note=args.note,
    )
    store = mapping.add_mapping(record, store)
    path.write_text(mapping.save_mappings_tsv(store), encoding="utf-8")
    print(f"added; {len(store)} correspondences in {args.file}")
    return 0


def _split_ref(text: str) -> tuple[str, str]:
    resource, sep, entity_id = text.partition(":")
    if not sep:
        raise OntolexError(f"entity reference {text!r} must be resource:id")
    return resource, entity_id


def cmd_map_stats(args) -> int:
    store = mapping.load_mappings_tsv(Path(args.file))
    hist = mapping.paired_relation_histogram(store) if args.paired \
        else mapping.relation_histogram(store)
    print(hist.to_json() if args.json else hist.format_text())
    return 0


def cmd_map_coverage(args) -> int:
    store = mapping.load_mappings_tsv(Path(args.file))
    onto = _load_store(args.ontology)
    t = taxonomy.Taxonomy.from_store(onto)
    labels = {c.id: c.terms[0] if c.terms else str(c.id) for c in onto.concepts()}
    report = mapping.coverage_report(store, t, args.total, args.excluded, labels)
    print(report.to_json() if args.json else report.format_text())
    return 0


def cmd_search(args) -> int:
    store = _load_store(args.input)
    registry = _load_lexicons(args.lexicons)
    index = build_index(store, args.mode, registry)
    hits = search_query(args.term, index, match=args.match)
    for hit in hits:
        if hit.entry.is_concept:
            concept = store.concept(hit.concept_id)
            gloss = concept.gloss[:60] if concept.gloss else ""
            print(f"concept {hit.concept_id}\t{hit.entry.term}\t{gloss}")
        else:
            print(f"lexicon {hit.entry.lexicon_id}:{hit.entry.entry_id}\t{hit.entry.term}")
    print(f"{len(hits)} match(es)")
    return 0


def cmd_serve(args) -> int:
    store = _load_store(args.input)
    registry = _load_lexicons(args.lexicons)
    mappings = mapping.load_mappings_tsv(Path(args.mappings)) if args.mappings \
        else mapping.MappingStore()
    addr = args.addr or os.environ.get("ONTOLEX_ADDR", "127.0.0.1:8000")
    domain = args.domain or os.environ.get("ONTOLEX_DOMAIN", addr)
    ctx = service.ServiceContext(store=store, domain=domain,
                                 mappings=mappings, lexicons=registry)
    service.serve(ctx, addr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ontolex",
                                     description="lexical ontology engine")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("import", help="parse an interchange file and report its contents")
    p.add_argument("input")
    p.add_argument("-o", "--output", help="write the canonical form here")
    p.add_argument("--lexicons", action="append", help="lexicon TSV to load as well")
    p.set_defaults(func=cmd_import)

    p = sub.add_parser("export", help="write the canonical interchange bytes")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("validate", help="run record, taxonomy and gloss checks")
    p.add_argument("input")
    p.add_argument("--config", help="lint config JSON")
    p.add_argument("--lemmas", help="whitespace-separated lemma registry file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check-model", help="check the taxonomy against a world model")
    p.add_argument("input")
    p.add_argument("model", help="world model JSON file")
    p.set_defaults(func=cmd_check_model)

    p = sub.add_parser("map", help="mapping correspondence operations")
    map_sub = p.add_subparsers(dest="map_command", required=True)

    pa = map_sub.add_parser("add", help="append one correspondence to a TSV")
    pa.add_argument("file")
    pa.add_argument("--e1", required=True, help="source as resource:id")
    pa.add_argument("--e2", required=True, help="target as resource:id")
    pa.add_argument("--relation", required=True)
    pa.add_argument("--precision", type=float, required=True)
    pa.add_argument("--confidence", type=float, required=True)
    pa.add_argument("--annotator", default="cli")
    pa.add_argument("--note", default="")
    pa.set_defaults(func=cmd_map_add)

    ps = map_sub.add_parser("stats", help="relation histogram of a mapping TSV")
    ps.add_argument("file")
    ps.add_argument("--paired", action="store_true",
                    help="merge inverse relation pairs into single rows")
    ps.add_argument("--json", action="store_true")
    ps.set_defaults(func=cmd_map_stats)

    pc = map_sub.add_parser("coverage", help="placement report against an ontology")
    pc.add_argument("file")
    pc.add_argument("ontology")
    pc.add_argument("--total", type=int, required=True,
                    help="total source concepts considered")
    pc.add_argument("--excluded", type=int, required=True,
                    help="source concepts excluded as unmappable")
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(func=cmd_map_coverage)

    p = sub.add_parser("search", help="diacritic-consistent term search")
    p.add_argument("input")
    p.add_argument("term")
    p.add_argument("--mode", choices=["strict", "loose"], default="strict")
    p.add_argument("--match", choices=["exact", "prefix", "substring"], default="exact")
    p.add_argument("--lexicons", action="append")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("serve", help="serve the concept API over HTTP")
    p.add_argument("input")
    p.add_argument("--mappings", help="mapping TSV to expose on concept documents")
    p.add_argument("--lexicons", action="append")
    p.add_argument("--addr", help="listen address host:port (ONTOLEX_ADDR)")
    p.add_argument("--domain", help="domain used in IRIs (ONTOLEX_DOMAIN)")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OntolexError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
