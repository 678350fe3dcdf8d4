"""In-memory ontology model.

An :class:`Ontology` holds the named entities of one parsed OWL document,
keyed by IRI, together with its asserted subclass axioms and axiom counts.
Instances are built single-threaded by the ingest layer (or by hand in
tests) and treated as immutable afterwards, so they are safe to share
across concurrent readers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from enum import Enum

from .errors import PunningError

# IRIs are absolute: either scheme://... or a URN. Comparison is plain
# string equality everywhere; no normalization is applied.
_URN_RE = re.compile(r"^urn:[A-Za-z0-9][A-Za-z0-9-]{0,31}:.+", re.IGNORECASE)


def is_valid_iri(iri: str) -> bool:
    """True when `iri` is usable as an entity name."""
    if not iri:
        return False
    return "://" in iri or bool(_URN_RE.match(iri))


class EntityCategory(Enum):
    CLASS = "class"
    OBJECT_PROPERTY = "object_property"
    DATA_PROPERTY = "data_property"
    INDIVIDUAL = "individual"


@dataclass(frozen=True)
class Entity:
    """One named ontology entity.

    `labels` keeps every rdfs:label in document order as
    (language-tag, text) pairs; the tag is None for plain literals.
    An empty label list triggers the IRI-splitting fallback during
    label extraction.
    """

    iri: str
    category: EntityCategory
    labels: tuple[tuple[str | None, str], ...] = ()


class Ontology:
    """Entity sets, subclass axioms, and axiom counts of one document."""

    def __init__(self, ontology_iri: str | None = None):
        self.ontology_iri = ontology_iri
        self._entities: dict[str, Entity] = {}
        self.subclass_axioms: list[tuple[str, str]] = []
        self.total_axiom_count: int = 0
        self.logical_axiom_count: int = 0

    def add_entity(self, entity: Entity) -> None:
        """Register a named entity.

        Re-declaring an IRI in the same category merges its labels;
        declaring it in a second category raises PunningError (one label
        list per concept is assumed throughout the pipeline).
        """
        existing = self._entities.get(entity.iri)
        if existing is None:
            self._entities[entity.iri] = entity
            return
        if existing.category is not entity.category:
            raise PunningError(
                entity.iri, existing.category.value, entity.category.value
            )
        merged = existing.labels + tuple(
            lab for lab in entity.labels if lab not in existing.labels
        )
        self._entities[entity.iri] = replace(existing, labels=merged)

    def add_label(self, iri: str, lang: str | None, text: str) -> bool:
        """Attach a label to a declared entity; False when `iri` is unknown."""
        entity = self._entities.get(iri)
        if entity is None:
            return False
        if (lang, text) not in entity.labels:
            self._entities[iri] = replace(
                entity, labels=entity.labels + ((lang, text),)
            )
        return True

    def lookup(self, iri: str) -> Entity | None:
        """The declared entity for `iri`, or None; never invents entities."""
        return self._entities.get(iri)

    def entities(self, category: EntityCategory | None = None) -> list[Entity]:
        """Declared entities in deterministic (IRI-sorted) order."""
        selected = (
            e
            for e in self._entities.values()
            if category is None or e.category is category
        )
        return sorted(selected, key=lambda e: e.iri)

    def entity_count(self, category: EntityCategory) -> int:
        return sum(1 for e in self._entities.values() if e.category is category)

    @property
    def class_count(self) -> int:
        return self.entity_count(EntityCategory.CLASS)

    @property
    def object_property_count(self) -> int:
        return self.entity_count(EntityCategory.OBJECT_PROPERTY)

    @property
    def data_property_count(self) -> int:
        return self.entity_count(EntityCategory.DATA_PROPERTY)

    @property
    def individual_count(self) -> int:
        return self.entity_count(EntityCategory.INDIVIDUAL)

    @property
    def subclass_axiom_count(self) -> int:
        return len(self.subclass_axioms)

    def __len__(self) -> int:
        return len(self._entities)

    def __repr__(self) -> str:
        return (
            f"Ontology(iri={self.ontology_iri!r}, entities={len(self)}, "
            f"subclass_axioms={len(self.subclass_axioms)})"
        )
