"""Shared primitives: series coercion, point cost, paths, labeled datasets.

Series are plain 1-D float64 numpy arrays. :func:`as_series` is the single
validation gate every distance entry point goes through; datasets built by the
ingestion layer may carry NaN placeholders for missing values and are screened
before any distance is computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "LengthMismatchError",
    "UndefinedWindowError",
    "DatasetError",
    "ParseError",
    "as_series",
    "point_cost",
    "reverse",
    "WarpingPath",
    "validate_path",
    "LabeledDataset",
]


class LengthMismatchError(ValueError):
    """Raised when a measure requires equal-length series and got different lengths."""


class UndefinedWindowError(ValueError):
    """Raised when a band width is too narrow to join the two series ends."""


class DatasetError(ValueError):
    """Raised when a dataset cannot be used for the requested operation."""


class ParseError(ValueError):
    """Raised on malformed dataset files, carries the file path and line number."""

    def __init__(self, message: str, path=None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}: "
        if line is not None:
            where = f"{where}line {line}: "
        super().__init__(where + message)


def as_series(values) -> np.ndarray:
    """Coerce ``values`` to a validated, read-only float64 series.

    Accepts any 1-D array-like of real numbers. Every value must be finite
    and the series must contain at least one point. Already-validated
    read-only arrays are passed through without copying.
    """
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"series must be 1-D, got {arr.ndim} dimensions")
    if arr.size == 0:
        raise ValueError("series must contain at least one value")
    if not np.all(np.isfinite(arr)):
        raise ValueError("series values must all be finite")
    if arr is values and not arr.flags.writeable:
        return arr
    if arr is values:
        arr = arr.copy()
    arr.setflags(write=False)
    return arr


def point_cost(a: float, b: float) -> float:
    """Squared difference between two points, the cost unit of every measure."""
    d = float(a) - float(b)
    return d * d


def reverse(series) -> np.ndarray:
    """Return a read-only copy of ``series`` with the time axis reversed."""
    arr = as_series(series)
    out = arr[::-1].copy()
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class WarpingPath:
    """A monotone alignment between two series as 1-based (i, j) index pairs."""

    steps: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.steps)

    def __getitem__(self, k):
        return self.steps[k]


def validate_path(path, len_s: int, len_t: int) -> bool:
    """Check that ``path`` is a valid warping path for the given lengths.

    A valid path starts at (1, 1), ends at (len_s, len_t) and each step
    advances one of the indices by one or both by one.
    """
    steps = list(path)
    if not steps:
        return False
    if tuple(steps[0]) != (1, 1):
        return False
    if tuple(steps[-1]) != (len_s, len_t):
        return False
    for (pi, pj), (i, j) in zip(steps, steps[1:]):
        di, dj = i - pi, j - pj
        if (di, dj) not in ((1, 0), (0, 1), (1, 1)):
            return False
    return True


def _as_raw_series(values) -> np.ndarray:
    # Ingestion-side coercion: NaN placeholders allowed, flagged downstream.
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"series must be 1-D, got {arr.ndim} dimensions")
    if arr.size == 0:
        raise ValueError("series must contain at least one value")
    if arr is values:
        arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class LabeledDataset:
    """An ordered collection of labeled series from one split of a dataset.

    The container itself tolerates ragged lengths and NaN placeholders so the
    ingestion layer can load any file and let admission decide; the
    ``variable_length`` and ``has_missing`` flags expose those conditions.
    """

    name: str
    split: str
    series: tuple[np.ndarray, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        series = tuple(_as_raw_series(s) for s in self.series)
        labels = tuple(str(lab) for lab in self.labels)
        if len(series) != len(labels):
            raise ValueError(
                f"{len(series)} series but {len(labels)} labels"
            )
        if not series:
            raise ValueError("dataset must contain at least one item")
        object.__setattr__(self, "series", series)
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.series)

    @property
    def items(self) -> tuple[tuple[np.ndarray, str], ...]:
        return tuple(zip(self.series, self.labels))

    @property
    def classes(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.labels)))

    @property
    def class_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for lab in sorted(self.labels):
            counts[lab] = counts.get(lab, 0) + 1
        return counts

    @property
    def length(self) -> int | None:
        """Common series length, or None when lengths differ."""
        lengths = {s.shape[0] for s in self.series}
        if len(lengths) == 1:
            return next(iter(lengths))
        return None

    @property
    def variable_length(self) -> bool:
        return self.length is None

    @property
    def has_missing(self) -> bool:
        return any(not np.all(np.isfinite(s)) for s in self.series)
