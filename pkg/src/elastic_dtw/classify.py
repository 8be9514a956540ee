"""Nearest-neighbor classification with early-abandoning distance scans.

The scan keeps the best distance so far as the cutoff for the next candidate,
which prunes most of the work without changing any decision: the
early-abandoning kernels return the exact distance whenever it is within the
cutoff. Ties on distance are broken toward the lowest training index, and a
pruned candidate (sentinel +inf) can never displace the incumbent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DatasetError, LabeledDataset, as_series
from .distances import DistanceSpec, _binding

__all__ = ["ClassificationOutcome", "nn1", "loocv_accuracy", "evaluate"]


@dataclass(frozen=True)
class ClassificationOutcome:
    """Per-item predictions of an evaluation run plus the overall accuracy."""

    true_labels: tuple[str, ...]
    predictions: tuple[str, ...]
    nearest_indices: tuple[int, ...]
    distances: tuple[float, ...]
    accuracy: float

    def __post_init__(self):
        n = len(self.true_labels)
        if not (len(self.predictions) == len(self.nearest_indices) == len(self.distances) == n):
            raise ValueError("outcome fields must have equal lengths")

    def to_csv(self) -> str:
        lines = ["true_label,predicted_label,nearest_index,distance"]
        for true, pred, idx, dist in zip(
            self.true_labels, self.predictions, self.nearest_indices, self.distances
        ):
            lines.append(f"{true},{pred},{idx},{float(dist)!r}")
        return "\n".join(lines) + "\n"


def _check_usable(train: LabeledDataset) -> None:
    if train.has_missing:
        raise DatasetError(f"dataset {train.name!r} has missing values")


class _Scanner:
    """Binds the kernel per (length, length) pair so a scan revalidates nothing."""

    def __init__(self, spec: DistanceSpec):
        self.spec = spec
        self._cache: dict[tuple[int, int], tuple] = {}

    def dist(self, a: np.ndarray, b: np.ndarray, cutoff: float) -> float:
        key = (a.shape[0], b.shape[0])
        bound = self._cache.get(key)
        if bound is None:
            bound = _binding(self.spec, key[0], key[1])
            self._cache[key] = bound
        kern, extra = bound
        return kern(a, b, *extra, cutoff)


def _nn_scan(scanner, series, labels, query, skip: int = -1) -> tuple[str, int, float]:
    best = math.inf
    best_idx = -1
    best_label = ""
    for idx, candidate in enumerate(series):
        if idx == skip:
            continue
        d = scanner.dist(candidate, query, best)
        if d < best:
            best = d
            best_idx = idx
            best_label = labels[idx]
    return best_label, best_idx, float(best)


def nn1(train: LabeledDataset, query, spec: DistanceSpec) -> tuple[str, int, float]:
    """Label, index and distance of the nearest training item to ``query``.

    Training items are scanned in dataset order; equal distances keep the
    earlier index.
    """
    _check_usable(train)
    query = as_series(query)
    scanner = _Scanner(spec)
    label, idx, dist = _nn_scan(scanner, train.series, train.labels, query)
    return label, idx, dist


def loocv_accuracy(train: LabeledDataset, spec: DistanceSpec, *, cache: bool = False) -> float:
    """Leave-one-out 1-NN accuracy of ``spec`` on a training split.

    With ``cache=True`` the full pairwise distance matrix is materialized
    first (exact distances, no abandoning); predictions are identical, only
    the memory/time trade-off changes.
    """
    _check_usable(train)
    n = len(train)
    if n < 2:
        raise DatasetError("leave-one-out needs at least two items")
    correct = 0
    if cache:
        full = np.full((n, n), math.inf)
        scanner = _Scanner(spec)
        for i in range(n):
            for j in range(i + 1, n):
                d = scanner.dist(train.series[i], train.series[j], math.inf)
                full[i, j] = d
                full[j, i] = d
        for i in range(n):
            j = int(np.argmin(full[i]))
            if train.labels[j] == train.labels[i]:
                correct += 1
    else:
        scanner = _Scanner(spec)
        for i in range(n):
            label, _, _ = _nn_scan(scanner, train.series, train.labels, train.series[i], skip=i)
            if label == train.labels[i]:
                correct += 1
    return correct / n


def evaluate(train: LabeledDataset, test: LabeledDataset, spec: DistanceSpec) -> ClassificationOutcome:
    """Classify every test item against the training split, in test order."""
    _check_usable(train)
    _check_usable(test)
    scanner = _Scanner(spec)
    predictions = []
    indices = []
    dists = []
    correct = 0
    for query, true_label in zip(test.series, test.labels):
        label, idx, d = _nn_scan(scanner, train.series, train.labels, query)
        predictions.append(label)
        indices.append(idx)
        dists.append(d)
        if label == true_label:
            correct += 1
    return ClassificationOutcome(
        true_labels=tuple(test.labels),
        predictions=tuple(predictions),
        nearest_indices=tuple(indices),
        distances=tuple(dists),
        accuracy=correct / len(test),
    )
