"""ontolex: an engine for wordnet-style lexical ontologies.

Submodules:

- ``model``: concept/sense/individual records, store snapshots, local checks
- ``taxonomy``: subsumption forest, foreign-hierarchy audits, rigidity check
- ``semantics``: finite world models, subsumption/identity/disjointness
- ``glosslint``: gloss formulation and synset policy lints
- ``interchange``: canonical XML import/export
- ``lexicons``: registry of digitized lexicon entries (TSV)
- ``normalize``: diacritic-aware term normalization
- ``search``: diacritic-consistent term search index
- ``mapping``: cross-resource correspondences, agreement and coverage stats
- ``service``: URL scheme, JSON/N-Triples rendering, WSGI app
- ``cli``: the ``ontolex`` command
"""

from .model import (
    Concept,
    Finding,
    Individual,
    OntologicalProfile,
    OntologyStore,
    Sense,
    StoreBuilder,
    polysemy_index,
    validate_concept_record,
)
from .taxonomy import (
    ForeignHierarchy,
    Taxonomy,
    ancestors,
    audit_cycles,
    audit_redundant_edges,
    check_rigidity,
    set_parent,
)
from .semantics import (
    WorldModel,
    admissible_extensions,
    check_taxonomy,
    concepts_identical,
    subsumes,
    synonym_classes,
    union_model,
)
from .glosslint import LintConfig, lint_gap_budget, lint_gloss, lint_store, lint_synset_policy
from .interchange import export_interchange, import_interchange
from .lexicons import LexicalSense, Lexicon, LexiconRegistry
from .normalize import NormalizedKey, normalize_term, skeleton
from .search import SearchIndex, build_index, query
from .mapping import (
    AgreementTable,
    EntityRef,
    MappingCorrespondence,
    MappingStore,
    PartialRuleSet,
    PlacementReport,
    add_mapping,
    agreement_stats,
    combined_agreement,
    coverage_report,
    load_mappings_tsv,
    paired_relation_histogram,
    relation_histogram,
    save_mappings_tsv,
    weak_mappings,
)
from .service import Route, ServiceContext, export_triples, make_wsgi_app, render_concept, resolve_route

__version__ = "0.1.0"
