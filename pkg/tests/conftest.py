import sys
from pathlib import Path

import pytest

from ontomatch.model import Entity, EntityCategory, Ontology

sys.path.insert(0, str(Path(__file__).parent))

TTL_HEADER = """\
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
"""


def synth_ontology(
    n_classes=0,
    n_object_properties=0,
    n_data_properties=0,
    n_individuals=0,
    n_subclass_axioms=0,
    base="http://example.org/synthetic#",
) -> Ontology:
    """Ontology with exactly the requested entity and axiom counts."""
    onto = Ontology(base.rstrip("#"))
    for i in range(n_classes):
        onto.add_entity(Entity(f"{base}C{i:03d}", EntityCategory.CLASS))
    for i in range(n_object_properties):
        onto.add_entity(Entity(f"{base}op{i:03d}", EntityCategory.OBJECT_PROPERTY))
    for i in range(n_data_properties):
        onto.add_entity(Entity(f"{base}dp{i:03d}", EntityCategory.DATA_PROPERTY))
    for i in range(n_individuals):
        onto.add_entity(Entity(f"{base}ind{i:03d}", EntityCategory.INDIVIDUAL))
    assert n_subclass_axioms < max(n_classes, 1), "need a parent class per axiom"
    for i in range(n_subclass_axioms):
        onto.subclass_axioms.append((f"{base}C{i + 1:03d}", f"{base}C{i:03d}"))
    return onto


@pytest.fixture
def write_file(tmp_path):
    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
