"""Command-line interface.

Subcommands: ``match`` (align two ontologies), ``eval`` (score an
alignment against a reference), ``metrics`` (ontology quality metrics),
``labels`` (dump extracted label records). Outputs are deterministic:
identical invocations on identical inputs produce byte-identical files;
the only timestamp lives in the run manifest.

Exit codes: 0 success, 2 unreadable or malformed input, 3 bad flags,
4 no in-scope entities on one side of a match.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from pathlib import Path

from . import __version__
from .alignio import (
    RunManifest,
    alignment_to_json,
    alignment_to_tsv,
    read_alignment_tsv,
    read_reference_tsv,
)
from .errors import EmptyOntologyError, ParseError, PunningError
from .evaluation import evaluate
from .ingest import parse_file
from .lexicon import SynonymLexicon
from .matching import MatchConfig, MatchScope, match
from .metrics import compute_metrics

_EXIT_OK = 0
_EXIT_PARSE = 2
_EXIT_FLAGS = 3
_EXIT_EMPTY = 4


class _FlagError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # one-line machine-parsable reason, exit 3 (argparse defaults to 2)
    def error(self, message):
        print(f"error: flags: {message}", file=sys.stderr)
        raise SystemExit(_EXIT_FLAGS)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ontomatch",
        description="Label-based schema matching and evaluation for OWL ontologies.",
    )
    parser.add_argument("--version", action="version", version=f"ontomatch {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_match = sub.add_parser("match", help="align two ontologies")
    p_match.add_argument("source", help="source ontology (.ttl/.owl/.rdf)")
    p_match.add_argument("target", help="target ontology (.ttl/.owl/.rdf)")
    p_match.add_argument("--alpha", type=float, default=0.8,
                         help="similarity threshold in [0,1] (default 0.8)")
    p_match.add_argument("--synonyms", metavar="FILE",
                         help="synonym lexicon (one comma-separated synset per line)")
    p_match.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p_match.add_argument("--scope", choices=("classes", "all"), default="classes",
                         help="match classes only, or classes and properties")
    p_match.add_argument("--one-to-one", action="store_true",
                         help="greedy 1:1 filtering of the correspondences")
    p_match.add_argument("--workers", type=int, default=0,
                         help="matrix worker count (default: available parallelism)")
    p_match.add_argument("-o", "--output", metavar="FILE",
                         help="write the alignment here instead of stdout")
    p_match.add_argument("--manifest", metavar="FILE",
                         help="run manifest path (default: OUTPUT.manifest.json)")
    p_match.add_argument("--figures", metavar="DIR",
                         help="also render similarity figures into DIR")
    p_match.set_defaults(func=cmd_match)

    p_eval = sub.add_parser("eval", help="score an alignment against a reference")
    p_eval.add_argument("alignment", help="produced alignment TSV")
    p_eval.add_argument("reference", help="reference alignment TSV")
    p_eval.add_argument("--figures", metavar="DIR",
                        help="also render a precision/recall/F chart into DIR")
    p_eval.set_defaults(func=cmd_eval)

    p_metrics = sub.add_parser("metrics", help="ontology quality metrics")
    p_metrics.add_argument("ontology", help="ontology file (.ttl/.owl/.rdf)")
    p_metrics.add_argument("--format", choices=("table", "json"), default="table")
    p_metrics.add_argument("--figures", metavar="DIR",
                           help="also render a metrics chart into DIR")
    p_metrics.set_defaults(func=cmd_metrics)

    p_labels = sub.add_parser("labels", help="dump extracted label records")
    p_labels.add_argument("ontology", help="ontology file (.ttl/.owl/.rdf)")
    p_labels.add_argument("--scope", choices=("classes", "all"), default="classes")
    p_labels.set_defaults(func=cmd_labels)

    return parser


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_match(args) -> int:
    if not 0.0 <= args.alpha <= 1.0:
        raise _FlagError(f"--alpha must be in [0, 1], got {args.alpha}")
    if args.workers < 0:
        raise _FlagError(f"--workers must be >= 0, got {args.workers}")
    workers = args.workers or os.cpu_count() or 1

    source, _ = parse_file(args.source)
    target, _ = parse_file(args.target)
    lexicon = (
        SynonymLexicon.from_file(args.synonyms)
        if args.synonyms
        else SynonymLexicon()
    )
    config = MatchConfig(
        alpha=args.alpha,
        entity_scope=(
            MatchScope.CLASSES_AND_PROPERTIES
            if args.scope == "all"
            else MatchScope.CLASSES_ONLY
        ),
    )
    matrix, alignment = match(
        source,
        target,
        lexicon,
        config,
        workers=workers,
        one_to_one=args.one_to_one,
        source_id=args.source,
        target_id=args.target,
    )

    text = (
        alignment_to_json(alignment)
        if args.format == "json"
        else alignment_to_tsv(alignment)
    )
    _write_text(args.output, text)

    manifest_path = args.manifest
    if manifest_path is None and args.output is not None:
        manifest_path = args.output + ".manifest.json"
    if manifest_path is not None:
        manifest = RunManifest.for_run(
            command="match",
            inputs=[args.source, args.target],
            alpha=args.alpha,
            lexicon=args.synonyms,
            tool_version=__version__,
        )
        _write_text(manifest_path, manifest.to_json())

    if args.figures:
        from .report import save_match_figures

        save_match_figures(matrix, args.alpha, args.figures)
    return _EXIT_OK


def cmd_eval(args) -> int:
    produced = read_alignment_tsv(args.alignment)
    reference = read_reference_tsv(args.reference)
    report = evaluate(produced, reference)
    print(
        f"precision {report.precision:.3f} "
        f"recall {report.recall:.3f} "
        f"f {report.f_measure:.3f}"
    )
    if args.figures:
        from .report import save_eval_figure

        save_eval_figure(report, args.figures)
    return _EXIT_OK


_METRIC_ROWS = [
    ("axioms", "axioms", "{}"),
    ("logical axioms", "logical_axioms", "{}"),
    ("classes", "class_count", "{}"),
    ("object properties", "object_property_count", "{}"),
    ("data properties", "data_property_count", "{}"),
    ("subclass axioms", "subclass_axiom_count", "{}"),
    ("attribute richness", "attribute_richness", "{:.3f}"),
    ("inheritance richness", "inheritance_richness", "{:.3f}"),
    ("relation richness", "relation_richness", "{:.3f}"),
]


def cmd_metrics(args) -> int:
    onto, _ = parse_file(args.ontology)
    report = compute_metrics(onto)
    if args.format == "json":
        print(json.dumps(dataclasses.asdict(report), indent=2))
    else:
        width = max(len(name) for name, _, _ in _METRIC_ROWS)
        for name, attr, fmt in _METRIC_ROWS:
            value = fmt.format(getattr(report, attr))
            flag = "  (degenerate: zero denominator)" if attr in report.degenerate else ""
            print(f"{name:<{width}}  {value}{flag}")
    if args.figures:
        from .report import save_metrics_figure

        save_metrics_figure(report, args.figures)
    return _EXIT_OK


def cmd_labels(args) -> int:
    from .matching import extract_labels

    onto, _ = parse_file(args.ontology)
    scope = (
        MatchScope.CLASSES_AND_PROPERTIES
        if args.scope == "all"
        else MatchScope.CLASSES_ONLY
    )
    for record in extract_labels(onto, scope):
        print(f"{record.iri}\t{record.display_label}\t{' '.join(record.tokens)}")
    return _EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _FlagError as exc:
        print(f"error: flags: {exc}", file=sys.stderr)
        return _EXIT_FLAGS
    except (ParseError, PunningError) as exc:
        print(f"error: parse: {exc}", file=sys.stderr)
        return _EXIT_PARSE
    except EmptyOntologyError as exc:
        print(f"error: empty: {exc}", file=sys.stderr)
        return _EXIT_EMPTY
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return _EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
