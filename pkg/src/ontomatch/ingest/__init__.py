"""Parse OWL documents (RDF/XML or a Turtle subset) into the ontology model."""

from __future__ import annotations

import codecs
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from ..errors import ParseError, PunningError, UnrecognizedFormatError
from ..model import Ontology
from .builder import build_ontology
from .rdfxml import parse_rdfxml
from .turtle import parse_turtle

__all__ = [
    "DocumentFormat",
    "SourceDocument",
    "ParseDiagnostics",
    "detect_format",
    "parse",
    "parse_file",
    "ParseError",
    "PunningError",
    "UnrecognizedFormatError",
]


class DocumentFormat(Enum):
    RDF_XML = "rdfxml"
    TURTLE = "turtle"
    AUTO = "auto"


@dataclass
class SourceDocument:
    """Raw bytes of one ontology document plus a format hint."""

    content: bytes
    format_hint: DocumentFormat = DocumentFormat.AUTO
    name: str = "<input>"


@dataclass
class ParseDiagnostics:
    """Non-fatal findings from one parse run."""

    warnings: list[tuple[int, str]] = field(default_factory=list)
    skipped_triples: int = 0


def _decoded(doc: SourceDocument) -> str:
    data = doc.content
    if data.startswith(codecs.BOM_UTF8):
        data = data[len(codecs.BOM_UTF8):]
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not valid UTF-8: {exc.reason}", 0, doc.name) from exc


def detect_format(doc: SourceDocument) -> DocumentFormat:
    """Pick a concrete format for a document hinted as AUTO.

    XML documents are recognized by their opening markup; anything else
    must show a Turtle @prefix/@base (or SPARQL-style PREFIX/BASE)
    directive to count as Turtle.
    """
    text = _decoded(doc).lstrip("﻿ \t\r\n")
    if text.startswith("<?xml") or text.startswith("<rdf:RDF"):
        return DocumentFormat.RDF_XML
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        first_word = stripped.split(None, 1)[0]
        if first_word in ("@prefix", "@base") or first_word.upper() in (
            "PREFIX",
            "BASE",
        ):
            return DocumentFormat.TURTLE
    raise UnrecognizedFormatError(doc.name)


def parse(doc: SourceDocument) -> tuple[Ontology, ParseDiagnostics]:
    """Parse one document into an Ontology plus diagnostics.

    Raises ParseError for malformed content (with source line),
    PunningError when one IRI is declared in two entity categories, and
    UnrecognizedFormatError when an AUTO-hinted document matches no
    format heuristic.
    """
    fmt = doc.format_hint
    if fmt is DocumentFormat.AUTO:
        fmt = detect_format(doc)
    if fmt is DocumentFormat.TURTLE:
        triples, parse_warnings = parse_turtle(_decoded(doc), doc.name)
    else:
        triples, parse_warnings = parse_rdfxml(doc.content, doc.name)
    built = build_ontology(triples, doc.name)
    diagnostics = ParseDiagnostics(
        warnings=sorted(parse_warnings + built.warnings),
        skipped_triples=built.skipped_triples,
    )
    return built.ontology, diagnostics


_EXTENSION_FORMATS = {
    ".ttl": DocumentFormat.TURTLE,
    ".owl": DocumentFormat.RDF_XML,
    ".rdf": DocumentFormat.RDF_XML,
}


def parse_file(path: str | Path) -> tuple[Ontology, ParseDiagnostics]:
    """Parse an ontology file, choosing the format from its extension
    (.ttl, .owl, .rdf) and falling back to content detection."""
    path = Path(path)
    hint = _EXTENSION_FORMATS.get(path.suffix.lower(), DocumentFormat.AUTO)
    doc = SourceDocument(path.read_bytes(), hint, str(path))
    return parse(doc)
