"""End-to-end benchmark: tune, evaluate, and compare families across datasets.

Each (dataset, family) cell is an independent job: tunable families are tuned
on the train split by leave-one-out accuracy, then the chosen spec classifies
the test split. Datasets failing admission are excluded up front; a cell that
raises marks its dataset as failed without stopping the run. Only datasets
where every requested family completed enter the accuracy matrix.

Everything is deterministic for a fixed seed: family order is canonical,
the tuning seed for each dataset is derived from the run seed and the
dataset name (never from scheduling), and parallel execution with ``jobs``
greater than one changes nothing but wall time.
"""

from __future__ import annotations

import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations

import numpy as np

from .classify import ClassificationOutcome, evaluate
from .core import DatasetError
from .distances import DistanceSpec, Family, _coerce_family
from .stats import (
    AccuracyMatrix,
    best_alternative,
    holm_adjust,
    mean_ranks,
    wilcoxon_signed_rank,
)
from .tuning import TuningConfig, TuningResult, tune
from .ucr import DatasetPair, admit, dataset_metadata

__all__ = [
    "FAMILY_ORDER",
    "CellResult",
    "PairwiseTest",
    "BestComparison",
    "ComparisonReport",
    "BenchmarkResult",
    "run_benchmark",
]

FAMILY_ORDER = (Family.SQED, Family.DTW, Family.CDTW, Family.WDTW, Family.ADTW)

_UNTUNED = (Family.SQED, Family.DTW)


@dataclass(frozen=True)
class CellResult:
    """Outcome of one (dataset, family) evaluation."""

    dataset: str
    family: str
    spec: DistanceSpec
    accuracy: float
    tuning: TuningResult | None
    outcome: ClassificationOutcome


@dataclass(frozen=True)
class PairwiseTest:
    """Signed-rank comparison of two classifiers across the datasets."""

    a: str
    b: str
    statistic: float
    p_raw: float
    p_holm: float
    wins_a: int
    ties: int
    wins_b: int
    significant: bool


@dataclass(frozen=True)
class BestComparison:
    """Target classifier against the per-dataset best of its competitors."""

    target: str
    statistic: float
    p_raw: float
    wins_target: int
    ties: int
    wins_best: int
    points: tuple[tuple[str, float, float], ...]


@dataclass(frozen=True)
class ComparisonReport:
    """Statistical summary of an accuracy matrix."""

    alpha: float
    mean_ranks: dict[str, float]
    pairwise: tuple[PairwiseTest, ...]
    scatter: dict[tuple[str, str], tuple[tuple[str, float, float], ...]]
    best: BestComparison | None


@dataclass(frozen=True)
class BenchmarkResult:
    accuracy_matrix: AccuracyMatrix
    comparison: ComparisonReport
    cells: tuple[CellResult, ...]
    excluded: tuple[tuple[str, str], ...]
    failures: tuple[tuple[str, str], ...]
    metadata: tuple[dict, ...]


def canonical_families(families) -> tuple[Family, ...]:
    wanted = {_coerce_family(f) for f in families}
    if not wanted:
        raise ValueError("at least one family is required")
    return tuple(f for f in FAMILY_ORDER if f in wanted)


def _derive_seed(seed: int, name: str) -> int:
    mix = np.random.SeedSequence([int(seed), zlib.crc32(name.encode("utf-8"))])
    return int(mix.generate_state(1, np.uint64)[0])


def _run_cell(pair: DatasetPair, family: str, cfg: TuningConfig) -> CellResult:
    fam = Family(family)
    if fam in _UNTUNED:
        spec = DistanceSpec(fam)
        tuning = None
    else:
        tuning = tune(pair.train, fam, cfg)
        spec = tuning.chosen
    outcome = evaluate(pair.train, pair.test, spec)
    return CellResult(
        dataset=pair.name,
        family=fam.value,
        spec=spec,
        accuracy=outcome.accuracy,
        tuning=tuning,
        outcome=outcome,
    )


def _safe_cell(pair: DatasetPair, family: str, cfg: TuningConfig):
    try:
        return pair.name, family, _run_cell(pair, family, cfg), None
    except Exception as exc:  # recorded, never fatal
        return pair.name, family, None, f"{type(exc).__name__}: {exc}"


def _compare(matrix: AccuracyMatrix, alpha: float) -> ComparisonReport:
    names = matrix.classifiers
    pairs = list(combinations(range(len(names)), 2))
    raw = []
    counts = []
    scatter: dict[tuple[str, str], tuple[tuple[str, float, float], ...]] = {}
    for ka, kb in pairs:
        col_a = matrix.values[:, ka]
        col_b = matrix.values[:, kb]
        res = wilcoxon_signed_rank(col_a, col_b)
        raw.append(res)
        wins_a = int(np.sum(col_a > col_b))
        wins_b = int(np.sum(col_b > col_a))
        ties = len(matrix.datasets) - wins_a - wins_b
        counts.append((wins_a, ties, wins_b))
        scatter[(names[ka], names[kb])] = tuple(
            (ds, float(va), float(vb))
            for ds, va, vb in zip(matrix.datasets, col_a, col_b)
        )
    adjusted = holm_adjust([r.p_value for r in raw]) if raw else ()
    pairwise = tuple(
        PairwiseTest(
            a=names[ka],
            b=names[kb],
            statistic=res.statistic,
            p_raw=res.p_value,
            p_holm=adj,
            wins_a=wa,
            ties=ti,
            wins_b=wb,
            significant=bool(adj < alpha),
        )
        for (ka, kb), res, adj, (wa, ti, wb) in zip(pairs, raw, adjusted, counts)
    )
    best = None
    target = Family.ADTW.value
    if target in names and len(names) >= 2:
        target_col = matrix.column(target)
        best_col = best_alternative(matrix, target)
        res = wilcoxon_signed_rank(target_col, best_col)
        best = BestComparison(
            target=target,
            statistic=res.statistic,
            p_raw=res.p_value,
            wins_target=int(np.sum(target_col > best_col)),
            ties=int(np.sum(target_col == best_col)),
            wins_best=int(np.sum(best_col > target_col)),
            points=tuple(
                (ds, float(tv), float(bv))
                for ds, tv, bv in zip(matrix.datasets, target_col, best_col)
            ),
        )
    return ComparisonReport(
        alpha=alpha,
        mean_ranks=mean_ranks(matrix),
        pairwise=pairwise,
        scatter=scatter,
        best=best,
    )


def run_benchmark(
    pairs,
    families,
    cfg: TuningConfig = TuningConfig(),
    *,
    alpha: float = 0.05,
    jobs: int = 1,
    progress=None,
) -> BenchmarkResult:
    """Run the full pipeline over ``pairs`` for the requested ``families``.

    ``pairs`` is an iterable of :class:`DatasetPair`; ``families`` any
    iterable of family names (order does not matter, the canonical order is
    used). ``progress``, when given, is called as ``progress(name, message)``
    once per dataset. Raises :class:`DatasetError` when no dataset completes.
    """
    pairs = sorted(pairs, key=lambda p: p.name)
    fams = canonical_families(families)
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    names = [p.name for p in pairs]
    if len(set(names)) != len(names):
        raise ValueError("dataset names must be unique")

    excluded = []
    admitted = []
    for pair in pairs:
        ok, reason = admit(pair)
        if ok:
            admitted.append(pair)
        else:
            excluded.append((pair.name, reason))
            if progress is not None:
                progress(pair.name, f"excluded: {reason}")

    outcomes: dict[tuple[str, str], tuple[CellResult | None, str | None]] = {}
    tasks = [
        (pair, fam.value, replace(cfg, rng_seed=_derive_seed(cfg.rng_seed, pair.name)))
        for pair in admitted
        for fam in fams
    ]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_safe_cell, *task) for task in tasks]
            for fut in futures:
                name, family, cell, err = fut.result()
                outcomes[(name, family)] = (cell, err)
    else:
        for task in tasks:
            name, family, cell, err = _safe_cell(*task)
            outcomes[(name, family)] = (cell, err)

    cells: list[CellResult] = []
    failures: list[tuple[str, str]] = []
    rows = []
    row_names = []
    for pair in admitted:
        dataset_cells = []
        dataset_errors = []
        for fam in fams:
            cell, err = outcomes[(pair.name, fam.value)]
            if err is None:
                dataset_cells.append(cell)
            else:
                dataset_errors.append((pair.name, f"{fam.value}: {err}"))
        if dataset_errors:
            failures.extend(dataset_errors)
            if progress is not None:
                progress(pair.name, f"failed: {dataset_errors[0][1]}")
            continue
        cells.extend(dataset_cells)
        rows.append([cell.accuracy for cell in dataset_cells])
        row_names.append(pair.name)
        if progress is not None:
            summary = " ".join(
                f"{cell.family}={cell.accuracy:.3f}" for cell in dataset_cells
            )
            progress(pair.name, summary)

    if not rows:
        raise DatasetError("no dataset completed evaluation")
    matrix = AccuracyMatrix(
        datasets=tuple(row_names),
        classifiers=tuple(f.value for f in fams),
        values=np.asarray(rows, dtype=np.float64),
    )
    comparison = _compare(matrix, alpha)
    return BenchmarkResult(
        accuracy_matrix=matrix,
        comparison=comparison,
        cells=tuple(cells),
        excluded=tuple(excluded),
        failures=tuple(failures),
        metadata=tuple(dataset_metadata(p) for p in pairs),
    )
