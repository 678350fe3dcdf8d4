"""Exception types shared across the toolkit."""


class OntomatchError(Exception):
    """Base class for all toolkit errors."""


class ParseError(OntomatchError):
    """Malformed input document.

    Carries the source name and the 1-based line where parsing failed so
    callers can report ``file:line: message``.
    """

    def __init__(self, message: str, line: int = 0, source: str = "<input>"):
        super().__init__(message)
        self.message = message
        self.line = line
        self.source = source

    def __str__(self) -> str:
        return f"{self.source}:{self.line}: {self.message}"


class UnrecognizedFormatError(ParseError):
    """Document format could not be determined from its content."""

    def __init__(self, source: str = "<input>"):
        super().__init__("unrecognized document format", 0, source)


class PunningError(OntomatchError):
    """Same IRI declared under two different entity categories."""

    def __init__(self, iri: str, first: str, second: str):
        super().__init__(
            f"IRI declared in two categories: {iri} ({first} vs {second})"
        )
        self.iri = iri
        self.first = first
        self.second = second


class EmptyOntologyError(OntomatchError):
    """An ontology contributed zero in-scope entities to a matching run."""
