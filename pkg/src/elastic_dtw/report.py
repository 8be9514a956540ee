"""Benchmark report files: delimited tables plus matplotlib figures.

``write_report`` lays out one directory with the accuracy matrix, the paired
test results, mean ranks, per-pair accuracy scatters (CSV and SVG), the
per-dataset tuning curves and predictions, and a JSON description of every
dataset seen. Output is byte-deterministic for a given benchmark result: the
file set, row order and float formatting are fixed, and the SVGs are rendered
with a pinned hash salt and no timestamp metadata.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .benchmark import BenchmarkResult, ComparisonReport

__all__ = ["write_report"]

_SVG_SALT = "elastic-dtw"


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_-]+", "_", name)


def _fmt(value) -> str:
    return repr(float(value))


def _write(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8")


def _scatter_csv(a: str, b: str, points) -> str:
    lines = [f"dataset,{a},{b}"]
    for ds, va, vb in points:
        lines.append(f"{ds},{_fmt(va)},{_fmt(vb)}")
    return "\n".join(lines) + "\n"


def _scatter_figure(path: Path, a: str, b: str, points, wins_a: int, ties: int, wins_b: int) -> None:
    xs = [va for _, va, _ in points]
    ys = [vb for _, _, vb in points]
    with matplotlib.rc_context({"svg.hashsalt": _SVG_SALT}):
        fig, ax = plt.subplots(figsize=(4.2, 4.2), constrained_layout=True)
        ax.plot([0, 1], [0, 1], color="0.6", linewidth=0.8, zorder=1)
        ax.scatter(xs, ys, s=22, color="#1f6f8b", alpha=0.85, zorder=2)
        ax.set_xlim(-0.02, 1.02)
        ax.set_ylim(-0.02, 1.02)
        ax.set_xlabel(f"{a} accuracy")
        ax.set_ylabel(f"{b} accuracy")
        ax.set_title(f"{a} vs {b}")
        ax.text(0.03, 0.94, f"{b} wins: {wins_b}", transform=ax.transAxes, fontsize=9)
        ax.text(0.03, 0.88, f"ties: {ties}", transform=ax.transAxes, fontsize=9)
        ax.text(0.62, 0.05, f"{a} wins: {wins_a}", transform=ax.transAxes, fontsize=9)
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)


def _rank_cliques(comparison: ComparisonReport, ordered: list[str]) -> list[tuple[int, int]]:
    """Maximal runs of rank-adjacent classifiers with no significant pair inside."""
    nonsig = {
        frozenset((t.a, t.b)): not t.significant for t in comparison.pairwise
    }
    c = len(ordered)
    cliques = []
    for i in range(c):
        j = i
        while j + 1 < c and all(
            nonsig.get(frozenset((ordered[p], ordered[q])), False)
            for p in range(i, j + 2)
            for q in range(p + 1, j + 2)
        ):
            j += 1
        if j > i:
            cliques.append((i, j))
    return [
        (i, j)
        for i, j in cliques
        if not any(oi <= i and j <= oj and (oi, oj) != (i, j) for oi, oj in cliques)
    ]


def _mean_rank_figure(path: Path, comparison: ComparisonReport) -> None:
    ordered = sorted(comparison.mean_ranks, key=lambda k: (comparison.mean_ranks[k], k))
    ranks = [comparison.mean_ranks[k] for k in ordered]
    c = len(ordered)
    cliques = _rank_cliques(comparison, ordered)
    with matplotlib.rc_context({"svg.hashsalt": _SVG_SALT}):
        fig, ax = plt.subplots(figsize=(6.0, 1.2 + 0.45 * c), constrained_layout=True)
        ax.set_xlim(0.8, c + 0.2)
        ax.set_ylim(-0.6 - 0.25 * max(1, len(cliques)), c)
        for level, name in enumerate(ordered):
            y = c - 1 - level
            ax.plot([ranks[level]], [y], marker="o", color="#1f6f8b")
            ax.annotate(
                f"{name} ({ranks[level]:.3f})",
                (ranks[level], y),
                textcoords="offset points",
                xytext=(6, 4),
                fontsize=9,
            )
        for k, (i, j) in enumerate(cliques):
            y = -0.4 - 0.25 * k
            ax.plot([ranks[i], ranks[j]], [y, y], color="0.25", linewidth=2.5)
        ax.set_yticks([])
        ax.set_xlabel("mean rank (1 is best)")
        ax.set_title(f"mean ranks, bars join pairs not separated at alpha={comparison.alpha}")
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)


def write_report(result: BenchmarkResult, out_dir, *, figures: bool = True) -> list[str]:
    """Write every report file under ``out_dir``; returns the relative names.

    The same result always produces the same bytes. Set ``figures=False`` to
    skip the SVG renders (the CSV and JSON files alone).
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[str] = []

    def emit(name: str, text: str) -> None:
        _write(out / name, text)
        written.append(name)

    matrix = result.accuracy_matrix
    comparison = result.comparison
    emit("accuracy_matrix.csv", matrix.to_csv())

    lines = ["classifier,mean_rank"]
    for name in matrix.classifiers:
        lines.append(f"{name},{_fmt(comparison.mean_ranks[name])}")
    emit("mean_ranks.csv", "\n".join(lines) + "\n")

    lines = ["a,b,statistic,p_raw,p_holm,wins_a,ties,wins_b,significant"]
    for t in comparison.pairwise:
        lines.append(
            f"{t.a},{t.b},{_fmt(t.statistic)},{_fmt(t.p_raw)},{_fmt(t.p_holm)},"
            f"{t.wins_a},{t.ties},{t.wins_b},{str(t.significant).lower()}"
        )
    emit("pairwise_tests.csv", "\n".join(lines) + "\n")

    if comparison.best is not None:
        b = comparison.best
        lines = [
            "target,statistic,p_raw,wins_target,ties,wins_best",
            f"{b.target},{_fmt(b.statistic)},{_fmt(b.p_raw)},"
            f"{b.wins_target},{b.ties},{b.wins_best}",
        ]
        emit("best_comparison.csv", "\n".join(lines) + "\n")
        emit("scatter_best_vs_" + _slug(b.target) + ".csv", _scatter_csv(b.target, "best", b.points))

    lines = ["dataset,family,param,omega_prime,loocv_accuracy"]
    for cell in result.cells:
        if cell.tuning is None:
            continue
        tun = cell.tuning
        scale = "" if tun.omega_prime is None else _fmt(tun.omega_prime)
        param = cell.spec.param
        param_text = _fmt(param) if isinstance(param, float) else str(param)
        lines.append(
            f"{cell.dataset},{cell.family},{param_text},{scale},{_fmt(tun.best_accuracy)}"
        )
    emit("chosen_params.csv", "\n".join(lines) + "\n")

    for (a, b), points in comparison.scatter.items():
        stem = f"scatter_{_slug(a)}_vs_{_slug(b)}"
        emit(stem + ".csv", _scatter_csv(a, b, points))

    for cell in result.cells:
        slug = f"{_slug(cell.dataset)}_{cell.family}"
        if cell.tuning is not None:
            emit(f"tuning_{slug}.csv", cell.tuning.to_csv())
        emit(f"predictions_{slug}.csv", cell.outcome.to_csv())

    payload = {
        "alpha": comparison.alpha,
        "datasets": list(result.metadata),
        "excluded": [list(item) for item in result.excluded],
        "failures": [list(item) for item in result.failures],
    }
    emit("datasets.json", json.dumps(payload, indent=2, sort_keys=True) + "\n")

    if figures:
        by_pair = {(t.a, t.b): t for t in comparison.pairwise}
        for (a, b), points in comparison.scatter.items():
            t = by_pair[(a, b)]
            name = f"scatter_{_slug(a)}_vs_{_slug(b)}.svg"
            _scatter_figure(out / name, a, b, points, t.wins_a, t.ties, t.wins_b)
            written.append(name)
        if comparison.best is not None:
            b = comparison.best
            name = "scatter_best_vs_" + _slug(b.target) + ".svg"
            _scatter_figure(
                out / name, b.target, "best", b.points, b.wins_target, b.ties, b.wins_best
            )
            written.append(name)
        name = "mean_ranks.svg"
        _mean_rank_figure(out / name, comparison)
        written.append(name)

    return written
