"""Label-based schema matching between two ontologies.

Pipeline: extract one label record per in-scope entity on each side,
score every cross pair with a string matcher (normalized Levenshtein
over the space-joined token sequences) and a synonym matcher (exact
token equality or lexicon synsets), average the two whenever the
synonym matcher produced evidence, and keep the pairs whose score
clears the threshold.

Both matchers are pure functions, so the score matrix can be computed
row-parallel with results identical to the sequential double loop.
"""

from __future__ import annotations

import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import EmptyOntologyError
from .lexicon import SynonymLexicon
from .model import EntityCategory, Ontology

_SEPARATORS = re.compile(r"[_\-\s]+")
_WS = re.compile(r"\s+")


class MatchScope(Enum):
    CLASSES_ONLY = "classes"
    CLASSES_AND_PROPERTIES = "all"


_SCOPE_CATEGORIES = {
    MatchScope.CLASSES_ONLY: (EntityCategory.CLASS,),
    MatchScope.CLASSES_AND_PROPERTIES: (
        EntityCategory.CLASS,
        EntityCategory.OBJECT_PROPERTY,
        EntityCategory.DATA_PROPERTY,
    ),
}


@dataclass(frozen=True)
class LabelRecord:
    """An entity's IRI, display label, and normalized token sequence."""

    iri: str
    display_label: str
    tokens: tuple[str, ...]

    @property
    def joined(self) -> str:
        return " ".join(self.tokens)


@dataclass(frozen=True)
class MatchConfig:
    """Knobs of one matching run.

    `alpha` is the acceptance threshold on the averaged score;
    `synonym_score` is the fixed similarity credited to synonym hits.
    """

    alpha: float = 0.8
    synonym_score: float = 0.9
    entity_scope: MatchScope = MatchScope.CLASSES_ONLY

    def validate(self) -> None:
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha}")
        if not 0.0 <= self.synonym_score <= 1.0:
            raise ValueError(
                f"synonym_score must be in [0, 1], got {self.synonym_score}"
            )


@dataclass(frozen=True)
class Correspondence:
    source: str
    target: str
    relation: str = "="
    score: float = 0.0


@dataclass
class Alignment:
    """Thresholded correspondences of one run, in deterministic order:
    descending score, then source IRI, then target IRI."""

    source_ontology: str
    target_ontology: str
    alpha: float
    correspondences: list[Correspondence] = field(default_factory=list)

    def pairs(self) -> set[tuple[str, str]]:
        return {(c.source, c.target) for c in self.correspondences}

    def __len__(self) -> int:
        return len(self.correspondences)


@dataclass
class SimilarityMatrix:
    """Averaged matcher scores for every (source, target) label pair."""

    source_records: list[LabelRecord]
    target_records: list[LabelRecord]
    scores: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return self.scores.shape


def split_iri(iri: str) -> str:
    """Label fallback for unlabeled entities: the IRI fragment, else the
    last path segment, else the whole IRI."""
    if "#" in iri:
        fragment = iri.rsplit("#", 1)[1]
        return fragment if fragment else iri
    if "/" in iri:
        segment = iri.rsplit("/", 1)[1]
        return segment if segment else iri
    return iri


def normalize_label(raw: str) -> list[str]:
    """Lowercase tokens split at underscores, hyphens, whitespace, and
    lowercase-to-uppercase camelCase boundaries. Digits stay attached to
    their fragment; all-caps acronyms stay whole."""
    tokens: list[str] = []
    for fragment in _SEPARATORS.split(raw):
        if not fragment:
            continue
        start = 0
        for i in range(1, len(fragment)):
            if fragment[i - 1].islower() and fragment[i].isupper():
                tokens.append(fragment[start:i].casefold())
                start = i
        tokens.append(fragment[start:].casefold())
    return [t for t in tokens if t]


def make_label_record(iri: str, labels: tuple[tuple[str | None, str], ...]) -> LabelRecord:
    """Apply the label-selection policy to one entity."""
    display = _pick_display(labels)
    if display is None or not display.strip():
        display = split_iri(iri)
    tokens = normalize_label(display)
    if not tokens:
        # display has no splittable content (all separators); keep it as
        # one squashed token so the record stays usable
        tokens = [_WS.sub("", display.casefold())]
    return LabelRecord(iri, display, tuple(tokens))


def _pick_display(labels: tuple[tuple[str | None, str], ...]) -> str | None:
    english = [
        text
        for (lang, text) in labels
        if lang is not None and (lang == "en" or lang.startswith("en-"))
    ]
    if english:
        return english[0]
    untagged = [text for (lang, text) in labels if lang is None]
    if untagged:
        return untagged[0]
    if labels:
        return min(text for (_, text) in labels)
    return None


def extract_labels(
    onto: Ontology, scope: MatchScope = MatchScope.CLASSES_ONLY
) -> list[LabelRecord]:
    """One LabelRecord per in-scope entity, in IRI-sorted order.

    Labeled entities use their first rdfs:label (English tags win, then
    untagged, then the lexicographically first); unlabeled ones fall back
    to splitting the IRI.
    """
    records = []
    for category in _SCOPE_CATEGORIES[scope]:
        for entity in onto.entities(category):
            records.append(make_label_record(entity.iri, entity.labels))
    records.sort(key=lambda r: r.iri)
    return records


def levenshtein_distance(a: str, b: str) -> int:
    """Minimum number of single-character insertions, deletions, and
    substitutions transforming `a` into `b` (over Unicode code points)."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    if len(b) > len(a):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        current = [i]
        for j, cb in enumerate(b, 1):
            cost = 0 if ca == cb else 1
            current.append(
                min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + cost)
            )
        previous = current
    return previous[-1]


def levenshtein_similarity(a: str, b: str) -> float:
    """1 - distance/max(|a|, |b|), and 1.0 for two empty strings."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - levenshtein_distance(a, b) / longest


def synonym_score(
    a_tokens, b_tokens, lexicon: SynonymLexicon, config: MatchConfig
) -> float | None:
    """Synonym matcher verdict: 1.0 on exact normalized equality, the
    configured synonym score when the lexicon relates the labels, None
    when it found no evidence."""
    a_joined = " ".join(a_tokens)
    b_joined = " ".join(b_tokens)
    if a_joined == b_joined:
        return 1.0
    if lexicon.synonymous(a_joined, b_joined):
        return config.synonym_score
    if _bijective_synonyms(tuple(a_tokens), tuple(b_tokens), lexicon):
        return config.synonym_score
    return None


def _bijective_synonyms(a_tokens, b_tokens, lexicon: SynonymLexicon) -> bool:
    # token multisets pair off one-to-one, each pair equal or synonymous
    if len(a_tokens) != len(b_tokens) or not a_tokens:
        return False
    remaining = list(b_tokens)

    def backtrack(i: int) -> bool:
        if i == len(a_tokens):
            return True
        for j, tb in enumerate(remaining):
            if tb is not None and lexicon.synonymous(a_tokens[i], tb):
                remaining[j] = None
                if backtrack(i + 1):
                    return True
                remaining[j] = tb
        return False

    return backtrack(0)


def pair_score(
    a: LabelRecord,
    b: LabelRecord,
    lexicon: SynonymLexicon,
    config: MatchConfig,
) -> float:
    """Averaged matcher score for one label pair.

    The string score always exists; the synonym score is averaged in
    only when the synonym matcher produced evidence, so absent synonym
    knowledge is neutral rather than a penalty.
    """
    sim_string = levenshtein_similarity(a.joined, b.joined)
    sim_synonym = synonym_score(a.tokens, b.tokens, lexicon, config)
    if sim_synonym is None:
        return sim_string
    return (sim_synonym + sim_string) / 2.0


def score_matrix(
    source_records: list[LabelRecord],
    target_records: list[LabelRecord],
    lexicon: SynonymLexicon,
    config: MatchConfig,
    workers: int = 1,
) -> SimilarityMatrix:
    """Score every cross pair; row-partitioned when workers > 1, with
    output identical to the sequential loop."""

    def one_row(i: int) -> list[float]:
        a = source_records[i]
        return [pair_score(a, b, lexicon, config) for b in target_records]

    n, m = len(source_records), len(target_records)
    scores = np.zeros((n, m), dtype=np.float64)
    if workers > 1 and n > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for i, row in enumerate(pool.map(one_row, range(n))):
                scores[i, :] = row
    else:
        for i in range(n):
            scores[i, :] = one_row(i)
    return SimilarityMatrix(source_records, target_records, scores)


def extract_one_to_one(correspondences: list[Correspondence]) -> list[Correspondence]:
    """Greedy 1:1 filter over an already-sorted correspondence list."""
    used_sources: set[str] = set()
    used_targets: set[str] = set()
    kept = []
    for c in correspondences:
        if c.source in used_sources or c.target in used_targets:
            continue
        kept.append(c)
        used_sources.add(c.source)
        used_targets.add(c.target)
    return kept


def match(
    source: Ontology,
    target: Ontology,
    lexicon: SynonymLexicon | None = None,
    config: MatchConfig | None = None,
    workers: int = 1,
    one_to_one: bool = False,
    source_id: str | None = None,
    target_id: str | None = None,
) -> tuple[SimilarityMatrix, Alignment]:
    """Run the full pipeline and threshold the matrix at config.alpha.

    Many-to-many matches are kept unless one_to_one is set. Raises
    EmptyOntologyError when either side has no in-scope entities (a
    scope or parse problem, not a valid empty result).
    """
    lexicon = lexicon if lexicon is not None else SynonymLexicon()
    config = config if config is not None else MatchConfig()
    config.validate()

    source_records = extract_labels(source, config.entity_scope)
    target_records = extract_labels(target, config.entity_scope)
    if not source_records:
        raise EmptyOntologyError("source ontology has no in-scope entities")
    if not target_records:
        raise EmptyOntologyError("target ontology has no in-scope entities")

    matrix = score_matrix(source_records, target_records, lexicon, config, workers)

    seen: set[tuple[str, str]] = set()
    correspondences = []
    for i, a in enumerate(source_records):
        for j, b in enumerate(target_records):
            score = float(matrix.scores[i, j])
            if score >= config.alpha and (a.iri, b.iri) not in seen:
                seen.add((a.iri, b.iri))
                correspondences.append(Correspondence(a.iri, b.iri, "=", score))
    correspondences.sort(key=lambda c: (-c.score, c.source, c.target))
    if one_to_one:
        correspondences = extract_one_to_one(correspondences)

    alignment = Alignment(
        source_ontology=source_id or source.ontology_iri or "<source>",
        target_ontology=target_id or target.ontology_iri or "<target>",
        alpha=config.alpha,
        correspondences=correspondences,
    )
    return matrix, alignment
