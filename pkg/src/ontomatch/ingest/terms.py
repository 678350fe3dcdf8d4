"""RDF term types and the vocabulary subset the ingest layer understands."""

from __future__ import annotations

from dataclasses import dataclass

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"
XML_NS = "http://www.w3.org/XML/1998/namespace"

RDF_TYPE = RDF_NS + "type"
RDF_FIRST = RDF_NS + "first"
RDF_REST = RDF_NS + "rest"
RDF_NIL = RDF_NS + "nil"
RDFS_LABEL = RDFS_NS + "label"
RDFS_SUBCLASSOF = RDFS_NS + "subClassOf"
RDFS_DOMAIN = RDFS_NS + "domain"
RDFS_RANGE = RDFS_NS + "range"
RDFS_SUBPROPERTYOF = RDFS_NS + "subPropertyOf"

OWL_CLASS = OWL_NS + "Class"
OWL_OBJECT_PROPERTY = OWL_NS + "ObjectProperty"
OWL_DATATYPE_PROPERTY = OWL_NS + "DatatypeProperty"
OWL_NAMED_INDIVIDUAL = OWL_NS + "NamedIndividual"
OWL_ONTOLOGY = OWL_NS + "Ontology"
OWL_IMPORTS = OWL_NS + "imports"
OWL_THING = OWL_NS + "Thing"
OWL_NOTHING = OWL_NS + "Nothing"
OWL_EQUIVALENT_CLASS = OWL_NS + "equivalentClass"
OWL_DISJOINT_WITH = OWL_NS + "disjointWith"
OWL_INVERSE_OF = OWL_NS + "inverseOf"

# rdf:type objects that mark a property characteristic axiom.
PROPERTY_CHARACTERISTICS = frozenset(
    OWL_NS + name
    for name in (
        "FunctionalProperty",
        "InverseFunctionalProperty",
        "TransitiveProperty",
        "SymmetricProperty",
        "AsymmetricProperty",
        "ReflexiveProperty",
        "IrreflexiveProperty",
    )
)

# Default namespace bindings for parsers that accept prefixed names.
WELL_KNOWN_PREFIXES = {
    "rdf": RDF_NS,
    "rdfs": RDFS_NS,
    "owl": OWL_NS,
    "xsd": XSD_NS,
}


@dataclass(frozen=True)
class BNode:
    """Blank node; labels are scoped to one parsed document."""

    label: str


@dataclass(frozen=True)
class Literal:
    """RDF literal with optional language tag or datatype IRI."""

    lexical: str
    lang: str | None = None
    datatype: str | None = None


# Subjects and objects are str (IRI), BNode, or Literal (objects only).
Term = "str | BNode | Literal"


@dataclass(frozen=True)
class Triple:
    subject: "str | BNode"
    predicate: str
    object: "str | BNode | Literal"
    line: int = 0
