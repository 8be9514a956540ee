"""Paired comparison statistics over accuracy tables.

The signed-rank test follows the convention used for classifier comparisons:
zero differences are dropped, tied absolute differences get averaged ranks,
the statistic is the smaller of the two signed rank sums, and the two-sided
p-value is the doubled lower tail. Up to 25 effective pairs the tail comes
from the exact null distribution (every sign assignment of the observed
ranks, counted by dynamic programming over doubled ranks, which are integers
even with ties); beyond that a normal approximation with tie correction and
continuity correction takes over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

__all__ = [
    "EXACT_LIMIT",
    "WilcoxonResult",
    "wilcoxon_signed_rank",
    "holm_adjust",
    "AccuracyMatrix",
    "mean_ranks",
    "best_alternative",
]

EXACT_LIMIT = 25


class WilcoxonResult(NamedTuple):
    statistic: float
    p_value: float
    degenerate: bool
    method: str


def _average_ranks(values: np.ndarray) -> np.ndarray:
    """Ascending 1-based ranks with ties averaged."""
    n = values.shape[0]
    order = np.argsort(values, kind="stable")
    ranks = np.empty(n, dtype=np.float64)
    i = 0
    while i < n:
        j = i
        while j + 1 < n and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j + 2) / 2.0
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def _exact_lower_tail(doubled_ranks: np.ndarray, doubled_stat: int, n: int) -> float:
    # counts[s] = number of sign assignments whose positive-rank sum is s/2
    total = int(doubled_ranks.sum())
    counts = np.zeros(total + 1, dtype=np.int64)
    counts[0] = 1
    for r in doubled_ranks:
        r = int(r)
        nxt = counts.copy()
        if r > 0:
            nxt[r:] += counts[: counts.shape[0] - r]
        counts = nxt
    count_le = int(counts[: doubled_stat + 1].sum())
    return count_le / 2**n


def wilcoxon_signed_rank(a, b) -> WilcoxonResult:
    """Two-sided Wilcoxon signed-rank test on paired samples.

    Returns the statistic (the smaller signed rank sum), the p-value, a
    degeneracy flag (True when every difference is zero, in which case the
    p-value is 1.0), and the method used (``exact`` or ``approx``).
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 1 or b.ndim != 1 or a.shape[0] != b.shape[0]:
        raise ValueError("paired samples must be 1-D and of equal length")
    if a.shape[0] == 0:
        raise ValueError("paired samples must be non-empty")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ValueError("paired samples must be finite")
    diff = a - b
    nz = diff[diff != 0.0]
    n = nz.shape[0]
    if n == 0:
        return WilcoxonResult(0.0, 1.0, True, "exact")
    ranks = _average_ranks(np.abs(nz))
    # Rank sums are multiples of 0.5 bounded by n(n+1)/2: exact in binary.
    w_pos = float(ranks[nz > 0].sum())
    w_neg = float(ranks[nz < 0].sum())
    stat = min(w_pos, w_neg)
    if n <= EXACT_LIMIT:
        doubled = np.rint(ranks * 2.0).astype(np.int64)
        tail = _exact_lower_tail(doubled, int(round(stat * 2.0)), n)
        p = min(1.0, 2.0 * tail)
        return WilcoxonResult(stat, p, False, "exact")
    mu = n * (n + 1) / 4.0
    tie_term = 0.0
    absd = np.sort(np.abs(nz))
    i = 0
    while i < n:
        j = i
        while j + 1 < n and absd[j + 1] == absd[i]:
            j += 1
        t = j - i + 1
        tie_term += t**3 - t
        i = j + 1
    var = n * (n + 1) * (2 * n + 1) / 24.0 - tie_term / 48.0
    sigma = math.sqrt(var)
    z = (stat - mu + 0.5) / sigma
    p = min(1.0, math.erfc(-z / math.sqrt(2.0)))
    return WilcoxonResult(stat, p, False, "approx")


def holm_adjust(p_values) -> tuple[float, ...]:
    """Holm step-down adjustment, results in the input order.

    Sorted ascending, the i-th smallest p-value is multiplied by (m - i),
    i counted from zero; adjusted values are made monotone along that order
    and capped at 1.
    """
    ps = [float(p) for p in p_values]
    for p in ps:
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"p-values must lie in [0, 1], got {p!r}")
    m = len(ps)
    order = sorted(range(m), key=lambda k: (ps[k], k))
    adjusted = [0.0] * m
    running = 0.0
    for pos, k in enumerate(order):
        val = ps[k] * (m - pos)
        if val < running:
            val = running
        if val > 1.0:
            val = 1.0
        adjusted[k] = val
        running = val
    return tuple(adjusted)


@dataclass(frozen=True)
class AccuracyMatrix:
    """Accuracies of several classifiers across several datasets.

    Rows are datasets, columns are classifiers. Every cell must be a real
    accuracy in [0, 1]; incomplete runs never enter the matrix.
    """

    datasets: tuple[str, ...]
    classifiers: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 2:
            raise ValueError("values must be 2-D (datasets x classifiers)")
        if values.shape != (len(self.datasets), len(self.classifiers)):
            raise ValueError(
                f"values shape {values.shape} does not match "
                f"{len(self.datasets)} datasets x {len(self.classifiers)} classifiers"
            )
        if len(self.datasets) < 1 or len(self.classifiers) < 1:
            raise ValueError("matrix needs at least one dataset and one classifier")
        if len(set(self.datasets)) != len(self.datasets):
            raise ValueError("dataset names must be unique")
        if len(set(self.classifiers)) != len(self.classifiers):
            raise ValueError("classifier names must be unique")
        if not np.all(np.isfinite(values)):
            raise ValueError("accuracies must be finite")
        if np.any(values < 0.0) or np.any(values > 1.0):
            raise ValueError("accuracies must lie in [0, 1]")
        if values is not self.values:
            object.__setattr__(self, "values", values)
        self.values.setflags(write=False)

    def column(self, classifier: str) -> np.ndarray:
        try:
            k = self.classifiers.index(classifier)
        except ValueError:
            raise ValueError(f"unknown classifier {classifier!r}") from None
        return self.values[:, k]

    def to_csv(self) -> str:
        lines = ["dataset," + ",".join(self.classifiers)]
        for name, row in zip(self.datasets, self.values):
            lines.append(name + "," + ",".join(repr(float(v)) for v in row))
        return "\n".join(lines) + "\n"


def mean_ranks(matrix: AccuracyMatrix) -> dict[str, float]:
    """Mean rank of each classifier across datasets, rank 1 being the best.

    Per dataset, classifiers are ranked by descending accuracy with ties
    averaged; the per-dataset ranks of each classifier are then averaged.
    The means always sum to c(c + 1)/2 for c classifiers.
    """
    ranks = np.empty_like(matrix.values)
    for r, row in enumerate(matrix.values):
        ranks[r] = _average_ranks(-row)
    means = ranks.mean(axis=0)
    return {name: float(mr) for name, mr in zip(matrix.classifiers, means)}


def best_alternative(matrix: AccuracyMatrix, target: str) -> np.ndarray:
    """Per-dataset maximum accuracy over every classifier except ``target``.

    This is the accuracy of a hypothetical oracle that picks the strongest
    competitor separately on each dataset.
    """
    try:
        k = matrix.classifiers.index(target)
    except ValueError:
        raise ValueError(f"unknown classifier {target!r}") from None
    if len(matrix.classifiers) < 2:
        raise ValueError("best_alternative needs at least one other classifier")
    others = np.delete(matrix.values, k, axis=1)
    return others.max(axis=1)
