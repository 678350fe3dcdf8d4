"""Alignment wire formats and the run manifest.

Produced alignments are TSV: header
``source_iri<TAB>target_iri<TAB>relation<TAB>score``, UTF-8, LF line
endings, scores with 4 decimals, rows already in alignment order.
Reference alignments use the same shape without the relation/score
columns. The JSON form is a single document carrying the run's alpha
and a correspondences array.

A RunManifest is written alongside produced alignments so a run can be
attributed to its exact inputs (content digests) and replayed; the
timestamp lives only here, keeping the alignment bytes deterministic.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .errors import ParseError
from .evaluation import ReferenceAlignment
from .matching import Alignment, Correspondence

ALIGNMENT_HEADER = "source_iri\ttarget_iri\trelation\tscore"
REFERENCE_HEADER = "source_iri\ttarget_iri"


def alignment_to_tsv(alignment: Alignment) -> str:
    lines = [ALIGNMENT_HEADER]
    for c in alignment.correspondences:
        lines.append(f"{c.source}\t{c.target}\t{c.relation}\t{c.score:.4f}")
    return "\n".join(lines) + "\n"


def alignment_to_json(alignment: Alignment) -> str:
    doc = {
        "source": alignment.source_ontology,
        "target": alignment.target_ontology,
        "alpha": alignment.alpha,
        "correspondences": [
            {
                "source": c.source,
                "target": c.target,
                "relation": c.relation,
                "score": float(f"{c.score:.4f}"),
            }
            for c in alignment.correspondences
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _read_rows(path: str | Path, expected_header: str, min_fields: int):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not valid UTF-8: {exc.reason}", 0, str(path)) from exc
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty alignment file", 1, str(path))
    header_fields = lines[0].rstrip("\r").split("\t")
    if header_fields[: len(expected_header.split("\t"))] != expected_header.split("\t"):
        raise ParseError(
            f"bad header, expected it to start with {expected_header!r}",
            1,
            str(path),
        )
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.rstrip("\r")
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) < min_fields:
            raise ParseError(
                f"expected at least {min_fields} tab-separated fields",
                lineno,
                str(path),
            )
        yield lineno, fields


def read_alignment_tsv(path: str | Path) -> Alignment:
    """Load a produced alignment; rows with only two columns (the
    reference shape) are accepted with relation '=' and score 1."""
    correspondences = []
    for lineno, fields in _read_rows(path, REFERENCE_HEADER, 2):
        source, target = fields[0], fields[1]
        relation = fields[2] if len(fields) > 2 else "="
        if len(fields) > 3:
            try:
                score = float(fields[3])
            except ValueError:
                raise ParseError(
                    f"malformed score {fields[3]!r}", lineno, str(path)
                ) from None
        else:
            score = 1.0
        correspondences.append(Correspondence(source, target, relation, score))
    return Alignment(
        source_ontology=str(path),
        target_ontology=str(path),
        alpha=0.0,
        correspondences=correspondences,
    )


def read_reference_tsv(path: str | Path) -> ReferenceAlignment:
    pairs = set()
    for lineno, fields in _read_rows(path, REFERENCE_HEADER, 2):
        if not fields[0] or not fields[1]:
            raise ParseError("empty IRI in reference pair", lineno, str(path))
        pairs.add((fields[0], fields[1]))
    return ReferenceAlignment(frozenset(pairs))


@dataclass
class RunManifest:
    """What produced an output file: command, inputs, and their digests."""

    command: str
    inputs: list[str]
    alpha: float | None
    lexicon: str | None
    tool_version: str
    input_digests: dict[str, str] = field(default_factory=dict)
    created_utc: str = ""

    @classmethod
    def for_run(
        cls,
        command: str,
        inputs: list[str | Path],
        alpha: float | None,
        lexicon: str | Path | None,
        tool_version: str,
    ) -> "RunManifest":
        digests = {}
        paths = [str(p) for p in inputs]
        if lexicon is not None:
            paths_to_hash = paths + [str(lexicon)]
        else:
            paths_to_hash = paths
        for p in paths_to_hash:
            digests[p] = "sha256:" + hashlib.sha256(Path(p).read_bytes()).hexdigest()
        return cls(
            command=command,
            inputs=paths,
            alpha=alpha,
            lexicon=str(lexicon) if lexicon is not None else None,
            tool_version=tool_version,
            input_digests=digests,
            created_utc=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        )

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, ensure_ascii=False) + "\n"
