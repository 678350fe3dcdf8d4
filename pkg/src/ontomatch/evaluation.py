"""Score an alignment against a reference: precision, recall, F-measure.

Comparison is on exact (source IRI, target IRI) pairs; scores and
relations are ignored. Degenerate conventions: with an empty produced
set, precision is 1.0 against an empty reference and 0.0 otherwise;
recall against an empty reference is 1.0; F is 0 when both P and R are.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .matching import Alignment

Pair = tuple[str, str]


@dataclass(frozen=True)
class ReferenceAlignment:
    pairs: frozenset[Pair]

    @classmethod
    def from_pairs(cls, pairs) -> "ReferenceAlignment":
        cleaned = set()
        for source, target in pairs:
            if not source or not target:
                raise ValueError("reference pairs need non-empty IRIs")
            cleaned.add((source, target))
        return cls(frozenset(cleaned))

    @classmethod
    def from_tsv(cls, path: str | Path) -> "ReferenceAlignment":
        from .alignio import read_reference_tsv

        return read_reference_tsv(path)

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class EvaluationReport:
    true_positives: int
    produced: int
    expected: int
    precision: float
    recall: float
    f_measure: float


def evaluate(
    produced: "Alignment | set[Pair]", reference: ReferenceAlignment
) -> EvaluationReport:
    produced_pairs = (
        produced.pairs() if isinstance(produced, Alignment) else set(produced)
    )
    expected_pairs = reference.pairs
    true_positives = len(produced_pairs & expected_pairs)

    if produced_pairs:
        precision = true_positives / len(produced_pairs)
    else:
        precision = 1.0 if not expected_pairs else 0.0
    recall = (
        true_positives / len(expected_pairs) if expected_pairs else 1.0
    )
    if precision + recall > 0:
        f_measure = 2 * precision * recall / (precision + recall)
    else:
        f_measure = 0.0

    return EvaluationReport(
        true_positives=true_positives,
        produced=len(produced_pairs),
        expected=len(expected_pairs),
        precision=precision,
        recall=recall,
        f_measure=f_measure,
    )
