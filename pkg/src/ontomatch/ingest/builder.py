"""Assemble an Ontology from parsed triples.

Two passes: entity declarations first (so labels and assertions can be
attributed regardless of statement order), then everything else. Axiom
counting convention: subclass/equivalent/disjoint axioms, property
domain/range, property characteristics, and assertions are logical;
declarations and annotations count toward the total only. Triples
outside the recognized subset are tallied as skipped, never fatal.
"""

from __future__ import annotations

from ..errors import ParseError
from ..model import Entity, EntityCategory, Ontology, is_valid_iri
from .terms import (
    BNode,
    Literal,
    OWL_CLASS,
    OWL_DATATYPE_PROPERTY,
    OWL_DISJOINT_WITH,
    OWL_EQUIVALENT_CLASS,
    OWL_IMPORTS,
    OWL_NAMED_INDIVIDUAL,
    OWL_NOTHING,
    OWL_OBJECT_PROPERTY,
    OWL_ONTOLOGY,
    OWL_THING,
    PROPERTY_CHARACTERISTICS,
    RDF_TYPE,
    RDFS_DOMAIN,
    RDFS_LABEL,
    RDFS_RANGE,
    RDFS_SUBCLASSOF,
    Triple,
)

_DECLARATION_CATEGORY = {
    OWL_CLASS: EntityCategory.CLASS,
    OWL_OBJECT_PROPERTY: EntityCategory.OBJECT_PROPERTY,
    OWL_DATATYPE_PROPERTY: EntityCategory.DATA_PROPERTY,
    OWL_NAMED_INDIVIDUAL: EntityCategory.INDIVIDUAL,
}

# owl:Thing is a default root, not a domain concept; neither builtin
# class is registered as an entity.
_BUILTIN_CLASSES = {OWL_THING, OWL_NOTHING}

_VOCABULARY_TYPES = (
    set(_DECLARATION_CATEGORY)
    | PROPERTY_CHARACTERISTICS
    | {OWL_ONTOLOGY}
    | _BUILTIN_CLASSES
)


class BuildResult:
    __slots__ = ("ontology", "warnings", "skipped_triples")

    def __init__(self, ontology: Ontology):
        self.ontology = ontology
        self.warnings: list[tuple[int, str]] = []
        self.skipped_triples = 0


def build_ontology(triples: list[Triple], source: str = "<input>") -> BuildResult:
    onto = Ontology()
    result = BuildResult(onto)
    declared: set[int] = set()

    # pass 1: declarations and the ontology header
    for idx, t in enumerate(triples):
        if t.predicate != RDF_TYPE or isinstance(t.object, (Literal, BNode)):
            continue
        if t.object == OWL_ONTOLOGY:
            if isinstance(t.subject, str) and onto.ontology_iri is None:
                onto.ontology_iri = t.subject
            declared.add(idx)
            continue
        category = _DECLARATION_CATEGORY.get(t.object)
        if category is None:
            continue
        declared.add(idx)
        if isinstance(t.subject, BNode):
            result.warnings.append((t.line, "blank node declaration skipped"))
            continue
        if t.subject in _BUILTIN_CLASSES:
            continue
        if not is_valid_iri(t.subject):
            result.warnings.append(
                (t.line, f"entity with non-IRI name skipped: {t.subject!r}")
            )
            continue
        onto.add_entity(Entity(t.subject, category))
        onto.total_axiom_count += 1

    # pass 2: labels, axioms, assertions
    for idx, t in enumerate(triples):
        if idx in declared:
            continue
        s, p, o = t.subject, t.predicate, t.object

        if p == RDFS_LABEL:
            onto.total_axiom_count += 1
            if isinstance(o, Literal) and isinstance(s, str):
                onto.add_label(s, o.lang, o.lexical)
            else:
                result.warnings.append((t.line, "non-literal rdfs:label ignored"))
            continue

        if p == RDFS_SUBCLASSOF:
            onto.total_axiom_count += 1
            onto.logical_axiom_count += 1
            if isinstance(s, str) and isinstance(o, str):
                child = onto.lookup(s)
                parent = onto.lookup(o)
                bad = (
                    child is not None and child.category is not EntityCategory.CLASS
                ) or (
                    parent is not None
                    and parent.category is not EntityCategory.CLASS
                )
                if bad:
                    result.warnings.append(
                        (t.line, "subclass axiom between non-class entities ignored")
                    )
                else:
                    onto.subclass_axioms.append((s, o))
            continue

        if p in (OWL_EQUIVALENT_CLASS, OWL_DISJOINT_WITH, RDFS_DOMAIN, RDFS_RANGE):
            onto.total_axiom_count += 1
            onto.logical_axiom_count += 1
            continue

        if p == RDF_TYPE:
            if o in PROPERTY_CHARACTERISTICS:
                onto.total_axiom_count += 1
                onto.logical_axiom_count += 1
                continue
            if isinstance(o, str) and o not in _VOCABULARY_TYPES:
                # class assertion (typed individual)
                onto.total_axiom_count += 1
                onto.logical_axiom_count += 1
                continue
            result.skipped_triples += 1
            continue

        if p == OWL_IMPORTS:
            result.warnings.append(
                (t.line, f"owl:imports not resolved: {o}")
            )
            result.skipped_triples += 1
            continue

        declared_pred = onto.lookup(p) if isinstance(p, str) else None
        if declared_pred is not None and declared_pred.category in (
            EntityCategory.OBJECT_PROPERTY,
            EntityCategory.DATA_PROPERTY,
        ):
            # property assertion over a declared property
            onto.total_axiom_count += 1
            onto.logical_axiom_count += 1
            continue

        result.skipped_triples += 1

    if onto.logical_axiom_count > onto.total_axiom_count:
        raise ParseError("axiom accounting invariant violated", 0, source)
    return result
