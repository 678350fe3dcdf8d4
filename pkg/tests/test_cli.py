import json

import pytest

from ontomatch.cli import main

from conftest import TTL_HEADER

EX_A = "http://example.org/a#"
EX_B = "http://example.org/b#"

SOURCE_TTL = TTL_HEADER + f"""\
@prefix : <{EX_A}> .
:Bank a owl:Class ; rdfs:label "Bank"@en .
:Loan a owl:Class ; rdfs:label "Loan"@en .
:Deposit a owl:Class ; rdfs:label "Deposit"@en .
"""

TARGET_TTL = TTL_HEADER + f"""\
@prefix : <{EX_B}> .
:Bank a owl:Class ; rdfs:label "Bank"@en .
:Credit a owl:Class ; rdfs:label "Credit"@en .
"""

METRICS_TTL = TTL_HEADER + """\
@prefix : <http://example.org/m#> .
:A a owl:Class . :B a owl:Class ; rdfs:subClassOf :A .
:p a owl:ObjectProperty .
:d a owl:DatatypeProperty .
"""


@pytest.fixture
def source(write_file):
    return str(write_file("a.ttl", SOURCE_TTL))


@pytest.fixture
def target(write_file):
    return str(write_file("b.ttl", TARGET_TTL))


# --- match -------------------------------------------------------------------

def test_match_stdout_tsv(source, target, capsys):
    assert main(["match", source, target]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == "source_iri\ttarget_iri\trelation\tscore"
    assert lines[1] == f"{EX_A}Bank\t{EX_B}Bank\t=\t1.0000"
    assert len(lines) == 2  # only the exact pair clears alpha=0.8


def test_match_self_alignment(source, capsys):
    assert main(["match", source, source]) == 0
    out = capsys.readouterr().out
    assert out.count("\t=\t1.0000") == 3


def test_match_with_synonyms_and_low_alpha(source, target, write_file, capsys):
    lexicon = write_file("syn.txt", "loan, credit\n")
    assert main(["match", source, target, "--alpha", "0.3", "--synonyms", str(lexicon)]) == 0
    out = capsys.readouterr().out
    assert f"{EX_A}Loan\t{EX_B}Credit\t=\t0.4500" in out


def test_match_json_format(source, target, capsys):
    assert main(["match", source, target, "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["alpha"] == 0.8
    assert doc["source"] == source
    assert doc["correspondences"][0]["score"] == 1.0


def test_match_output_file_and_manifest(source, target, tmp_path, capsys):
    out_path = tmp_path / "alignment.tsv"
    assert main(["match", source, target, "-o", str(out_path)]) == 0
    assert capsys.readouterr().out == ""
    assert out_path.read_text(encoding="utf-8").startswith("source_iri\t")
    manifest = json.loads((tmp_path / "alignment.tsv.manifest.json").read_text())
    assert manifest["command"] == "match"
    assert manifest["alpha"] == 0.8
    assert set(manifest["inputs"]) == {source, target}
    assert all(v.startswith("sha256:") for v in manifest["input_digests"].values())


def test_match_deterministic_bytes(source, target, tmp_path):
    first = tmp_path / "one.tsv"
    second = tmp_path / "two.tsv"
    for path, workers in ((first, "1"), (second, "5")):
        assert main(["match", source, target, "-o", str(path), "--workers", workers]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_match_empty_alignment_still_exits_zero(write_file, capsys):
    a = write_file("x.ttl", TTL_HEADER + "@prefix : <http://example.org/x#> .\n:OnlyHere a owl:Class .\n")
    b = write_file("y.ttl", TTL_HEADER + "@prefix : <http://example.org/y#> .\n:Elsewhere a owl:Class .\n")
    assert main(["match", str(a), str(b)]) == 0
    out = capsys.readouterr().out
    assert out == "source_iri\ttarget_iri\trelation\tscore\n"


def test_match_bad_alpha_exits_3(source, target, capsys):
    assert main(["match", source, target, "--alpha", "1.5"]) == 3
    err = capsys.readouterr().err
    assert err.startswith("error: flags:") and err.count("\n") == 1


def test_match_unknown_flag_exits_3(source, target, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["match", source, target, "--bogus"])
    assert exc.value.code == 3


def test_match_parse_failure_exits_2_names_file_and_line(write_file, target, capsys):
    bad = write_file("bad.ttl", "@prefix : <http://example.org/x#> .\n:A :broken\n")
    assert main(["match", str(bad), target]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error: parse:")
    assert "bad.ttl" in err and ":3:" in err


def test_match_empty_scope_exits_4(write_file, target, capsys):
    empty = write_file(
        "empty.ttl",
        TTL_HEADER + "@prefix : <http://example.org/e#> .\n:i a owl:NamedIndividual .\n",
    )
    assert main(["match", str(empty), target]) == 4
    assert capsys.readouterr().err.startswith("error: empty:")


def test_match_missing_file_exits_2(target, capsys):
    assert main(["match", "/nonexistent/a.ttl", target]) == 2
    assert capsys.readouterr().err.startswith("error: io:")


def test_match_scope_all_includes_properties(write_file, capsys):
    ttl = TTL_HEADER + "@prefix : <http://example.org/p#> .\n:hasBranch a owl:ObjectProperty .\n:X a owl:Class .\n"
    path = str(write_file("props.ttl", ttl))
    assert main(["match", path, path, "--scope", "all"]) == 0
    out = capsys.readouterr().out
    assert "hasBranch" in out


def test_match_one_to_one(source, capsys):
    assert main(["match", source, source, "--one-to-one", "--alpha", "0.0"]) == 0
    lines = capsys.readouterr().out.splitlines()[1:]
    sources = [l.split("\t")[0] for l in lines]
    assert len(sources) == len(set(sources)) == 3


def test_match_figures(source, target, tmp_path):
    figures = tmp_path / "figs"
    assert main(["match", source, target, "-o", str(tmp_path / "a.tsv"), "--figures", str(figures)]) == 0
    names = {p.name for p in figures.iterdir()}
    assert names == {"similarity_heatmap.png", "score_distribution.png"}


# --- eval --------------------------------------------------------------------

def _write_alignment(tmp_path, name, rows, with_scores=True):
    header = "source_iri\ttarget_iri\trelation\tscore" if with_scores else "source_iri\ttarget_iri"
    lines = [header]
    for row in rows:
        lines.append("\t".join(row))
    path = tmp_path / name
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


def test_eval_identical_files(tmp_path, capsys):
    rows = [("http://a#x", "http://b#x", "=", "1.0000")]
    path = _write_alignment(tmp_path, "same.tsv", rows)
    assert main(["eval", path, path]) == 0
    assert capsys.readouterr().out == "precision 1.000 recall 1.000 f 1.000\n"


def test_eval_disjoint_files(tmp_path, capsys):
    produced = _write_alignment(tmp_path, "p.tsv", [("http://a#x", "http://b#x", "=", "1.0")])
    reference = _write_alignment(tmp_path, "r.tsv", [("http://a#y", "http://b#y")], with_scores=False)
    assert main(["eval", produced, reference]) == 0
    assert capsys.readouterr().out == "precision 0.000 recall 0.000 f 0.000\n"


def test_eval_half_overlap(tmp_path, capsys):
    produced = _write_alignment(
        tmp_path, "p.tsv",
        [("http://a#a", "http://b#a", "=", "1.0"), ("http://a#b", "http://b#x", "=", "0.9")],
    )
    reference = _write_alignment(
        tmp_path, "r.tsv",
        [("http://a#a", "http://b#a"), ("http://a#c", "http://b#c")],
        with_scores=False,
    )
    assert main(["eval", produced, reference]) == 0
    assert capsys.readouterr().out == "precision 0.500 recall 0.500 f 0.500\n"


def test_eval_malformed_tsv_exits_2(tmp_path, write_file, capsys):
    bad = write_file("bad.tsv", "not\ta\theader\n")
    good = _write_alignment(tmp_path, "good.tsv", [("a", "b", "=", "1.0")])
    assert main(["eval", str(bad), good]) == 2
    assert capsys.readouterr().err.startswith("error: parse:")


def test_eval_figure(tmp_path, capsys):
    rows = [("http://a#x", "http://b#x", "=", "1.0000")]
    path = _write_alignment(tmp_path, "same.tsv", rows)
    figures = tmp_path / "figs"
    assert main(["eval", path, path, "--figures", str(figures)]) == 0
    assert (figures / "evaluation_scores.png").exists()


# --- metrics -----------------------------------------------------------------

def test_metrics_table(write_file, capsys):
    path = write_file("m.ttl", METRICS_TTL)
    assert main(["metrics", str(path)]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    names = [l.split("  ")[0].strip() for l in lines]
    assert names == [
        "axioms",
        "logical axioms",
        "classes",
        "object properties",
        "data properties",
        "subclass axioms",
        "attribute richness",
        "inheritance richness",
        "relation richness",
    ]
    assert "attribute richness" in out and "0.500" in out  # 1 dp / 2 classes


def test_metrics_codo_shaped_fixture(write_file, capsys):
    body = [f"@prefix : <http://example.org/codo#> ."]
    body += [f":C{i} a owl:Class ." for i in range(91)]
    body += [f":d{i} a owl:DatatypeProperty ." for i in range(50)]
    path = write_file("codo.ttl", TTL_HEADER + "\n".join(body) + "\n")
    assert main(["metrics", str(path)]) == 0
    out = capsys.readouterr().out
    assert "attribute richness     0.549" in out


def test_metrics_empty_ontology_flags_degenerate(write_file, capsys):
    path = write_file("empty.ttl", TTL_HEADER)
    assert main(["metrics", str(path)]) == 0
    out = capsys.readouterr().out
    assert out.count("(degenerate: zero denominator)") == 3


def test_metrics_json(write_file, capsys):
    path = write_file("m.ttl", METRICS_TTL)
    assert main(["metrics", str(path), "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["class_count"] == 2
    assert doc["subclass_axiom_count"] == 1


def test_metrics_parse_failure_exits_2(write_file, capsys):
    path = write_file("broken.owl", "<?xml version='1.0'?><rdf:RDF><oops>")
    assert main(["metrics", str(path)]) == 2
    assert capsys.readouterr().err.startswith("error: parse:")


def test_metrics_figure(write_file, tmp_path):
    path = write_file("m.ttl", METRICS_TTL)
    figures = tmp_path / "figs"
    assert main(["metrics", str(path), "--figures", str(figures)]) == 0
    assert (figures / "ontology_metrics.png").exists()


# --- labels ------------------------------------------------------------------

def test_labels_output(write_file, capsys):
    ttl = TTL_HEADER + (
        "@prefix : <http://example.org/l#> .\n"
        ':Bank a owl:Class ; rdfs:label "Bank"@en .\n'
        ":Cooperative_Banks a owl:Class .\n"
    )
    path = write_file("l.ttl", ttl)
    assert main(["labels", str(path)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "http://example.org/l#Bank\tBank\tbank" in lines
    assert (
        "http://example.org/l#Cooperative_Banks\tCooperative_Banks\tcooperative banks"
        in lines
    )


def test_labels_empty_ontology_zero_lines(write_file, capsys):
    path = write_file("none.ttl", TTL_HEADER)
    assert main(["labels", str(path)]) == 0
    assert capsys.readouterr().out == ""


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("ontomatch ")
