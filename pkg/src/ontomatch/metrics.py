"""Ontology quality metrics.

Ratio definitions follow the usual schema-metrics convention:

- attribute richness   = data properties / classes
- inheritance richness = subclass axioms / classes
- relation richness    = object properties / (subclass axioms + object properties)

Degenerate denominators yield 0 and are flagged in the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import Ontology


@dataclass
class MetricsReport:
    axioms: int
    logical_axioms: int
    class_count: int
    object_property_count: int
    data_property_count: int
    subclass_axiom_count: int
    attribute_richness: float
    inheritance_richness: float
    relation_richness: float
    degenerate: list[str] = field(default_factory=list)


def compute_metrics(onto: Ontology) -> MetricsReport:
    classes = onto.class_count
    object_properties = onto.object_property_count
    data_properties = onto.data_property_count
    subclass_axioms = onto.subclass_axiom_count

    degenerate = []
    if classes > 0:
        attribute_richness = data_properties / classes
        inheritance_richness = subclass_axioms / classes
    else:
        attribute_richness = 0.0
        inheritance_richness = 0.0
        degenerate.extend(["attribute_richness", "inheritance_richness"])
    relation_denominator = subclass_axioms + object_properties
    if relation_denominator > 0:
        relation_richness = object_properties / relation_denominator
    else:
        relation_richness = 0.0
        degenerate.append("relation_richness")

    return MetricsReport(
        axioms=onto.total_axiom_count,
        logical_axioms=onto.logical_axiom_count,
        class_count=classes,
        object_property_count=object_properties,
        data_property_count=data_properties,
        subclass_axiom_count=subclass_axioms,
        attribute_richness=attribute_richness,
        inheritance_richness=inheritance_richness,
        relation_richness=relation_richness,
        degenerate=degenerate,
    )
