"""Render run results as figures next to the delimited output files."""

from __future__ import annotations

from pathlib import Path

from .evaluation import EvaluationReport
from .matching import SimilarityMatrix
from .metrics import MetricsReport


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_match_figures(
    matrix: SimilarityMatrix, alpha: float, outdir: str | Path
) -> list[Path]:
    """Similarity heatmap and score histogram for one matching run."""
    plt = _pyplot()
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    fig, ax = plt.subplots(figsize=(8, 6))
    im = ax.imshow(matrix.scores, cmap="viridis", vmin=0.0, vmax=1.0, aspect="auto")
    ax.set_xlabel(f"target entities (m={len(matrix.target_records)})")
    ax.set_ylabel(f"source entities (n={len(matrix.source_records)})")
    ax.set_title("Pairwise label similarity")
    fig.colorbar(im, ax=ax, label="averaged score")
    path = outdir / "similarity_heatmap.png"
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(8, 4))
    ax.hist(matrix.scores.ravel(), bins=40, range=(0.0, 1.0), color="#4878cf")
    ax.axvline(alpha, color="#d65f5f", linestyle="--", label=f"threshold = {alpha:g}")
    ax.set_xlabel("pair score")
    ax.set_ylabel("pair count")
    ax.set_title("Score distribution")
    ax.legend()
    path = outdir / "score_distribution.png"
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    written.append(path)
    return written


def save_eval_figure(report: EvaluationReport, outdir: str | Path) -> Path:
    """Bar chart of precision, recall, and F-measure."""
    plt = _pyplot()
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    names = ["precision", "recall", "F-measure"]
    values = [report.precision, report.recall, report.f_measure]
    fig, ax = plt.subplots(figsize=(6, 4))
    bars = ax.bar(names, values, color=["#4878cf", "#6acc65", "#d65f5f"])
    for bar, value in zip(bars, values):
        ax.text(
            bar.get_x() + bar.get_width() / 2,
            value + 0.01,
            f"{value:.3f}",
            ha="center",
            va="bottom",
        )
    ax.set_ylim(0.0, 1.1)
    ax.set_ylabel("score")
    ax.set_title(
        f"Alignment quality ({report.true_positives}/{report.produced} correct, "
        f"{report.expected} expected)"
    )
    path = outdir / "evaluation_scores.png"
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def save_metrics_figure(report: MetricsReport, outdir: str | Path) -> Path:
    """Entity counts and richness ratios of one ontology, side by side."""
    plt = _pyplot()
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    fig, (left, right) = plt.subplots(1, 2, figsize=(11, 4))
    count_names = ["classes", "object\nproperties", "data\nproperties", "subclass\naxioms"]
    counts = [
        report.class_count,
        report.object_property_count,
        report.data_property_count,
        report.subclass_axiom_count,
    ]
    left.bar(count_names, counts, color="#4878cf")
    left.set_title("Entity and axiom counts")
    left.set_ylabel("count")

    ratio_names = ["attribute\nrichness", "inheritance\nrichness", "relation\nrichness"]
    ratios = [
        report.attribute_richness,
        report.inheritance_richness,
        report.relation_richness,
    ]
    right.bar(ratio_names, ratios, color="#6acc65")
    right.set_title("Richness ratios")
    for i, value in enumerate(ratios):
        right.text(i, value, f"{value:.3f}", ha="center", va="bottom")

    fig.tight_layout()
    path = Path(outdir) / "ontology_metrics.png"
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
