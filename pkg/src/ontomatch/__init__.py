"""ontomatch: label-based schema matching for OWL ontologies.

Parses RDF/XML and Turtle documents into a lightweight entity model,
detects overlapping concepts between two ontologies with Levenshtein
and synonym matchers, and evaluates alignments and ontology quality
metrics.
"""

__version__ = "0.1.0"

from .errors import (
    EmptyOntologyError,
    OntomatchError,
    ParseError,
    PunningError,
    UnrecognizedFormatError,
)
from .evaluation import EvaluationReport, ReferenceAlignment, evaluate
from .ingest import (
    DocumentFormat,
    ParseDiagnostics,
    SourceDocument,
    detect_format,
    parse,
    parse_file,
)
from .lexicon import SynonymLexicon
from .matching import (
    Alignment,
    Correspondence,
    LabelRecord,
    MatchConfig,
    MatchScope,
    SimilarityMatrix,
    extract_labels,
    levenshtein_distance,
    levenshtein_similarity,
    match,
    normalize_label,
    pair_score,
    split_iri,
    synonym_score,
)
from .metrics import MetricsReport, compute_metrics
from .model import Entity, EntityCategory, Ontology

__all__ = [
    "__version__",
    "Alignment",
    "Correspondence",
    "DocumentFormat",
    "EmptyOntologyError",
    "Entity",
    "EntityCategory",
    "EvaluationReport",
    "LabelRecord",
    "MatchConfig",
    "MatchScope",
    "MetricsReport",
    "Ontology",
    "OntomatchError",
    "ParseDiagnostics",
    "ParseError",
    "PunningError",
    "ReferenceAlignment",
    "SimilarityMatrix",
    "SourceDocument",
    "SynonymLexicon",
    "UnrecognizedFormatError",
    "compute_metrics",
    "detect_format",
    "evaluate",
    "extract_labels",
    "levenshtein_distance",
    "levenshtein_similarity",
    "match",
    "normalize_label",
    "pair_score",
    "parse",
    "parse_file",
    "split_iri",
    "synonym_score",
]
