"""Elastic distance measures over univariate series.

Five measures share the same squared-difference point cost:

* ``sqed``: squared Euclidean distance, equal lengths only.
* ``dtw``: dynamic time warping, unconstrained.
* ``cdtw``: DTW constrained to a band of half-width ``window`` around the
  diagonal. Undefined when the window cannot join the two series ends.
* ``wdtw``: DTW with every cell cost multiplied by a sigmoid weight of the
  distance to the diagonal, steepness ``g``.
* ``adtw``: DTW with a fixed additive ``penalty`` charged on every
  non-diagonal step; the first alignment is never penalized.

Each measure exists in two forms: an early-abandoning O(len)-space kernel
(used by :func:`distance` and :func:`distance_ea`) and a full-matrix
recurrence (used by :func:`cost_matrix` and :func:`warping_path`). The two
forms return bit-equal values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from . import _kernels as _k
from . import reference as _ref
from .core import (
    LengthMismatchError,
    UndefinedWindowError,
    WarpingPath,
    as_series,
)

__all__ = [
    "Family",
    "DistanceSpec",
    "weight_vector",
    "sqed",
    "dtw",
    "cdtw",
    "wdtw",
    "adtw",
    "distance",
    "distance_ea",
    "warping_path",
    "cost_matrix",
    "format_cost_matrix",
]


class Family(str, Enum):
    """The distance families understood by the parameterized entry points."""

    SQED = "sqed"
    DTW = "dtw"
    CDTW = "cdtw"
    WDTW = "wdtw"
    ADTW = "adtw"


def _coerce_family(value) -> Family:
    if isinstance(value, Family):
        return value
    try:
        return Family(str(value).lower())
    except ValueError:
        names = ", ".join(f.value for f in Family)
        raise ValueError(f"unknown distance family {value!r}, expected one of {names}")


def _check_window(param) -> int:
    if isinstance(param, bool) or not isinstance(param, (int, np.integer)):
        raise ValueError(f"cdtw window must be an integer, got {param!r}")
    w = int(param)
    if w < 0:
        raise ValueError(f"cdtw window must be >= 0, got {w}")
    return w


def _check_g(param) -> float:
    g = float(param)
    if not math.isfinite(g) or g <= 0.0:
        raise ValueError(f"wdtw weight steepness must be finite and > 0, got {param!r}")
    return g


def _check_penalty(param) -> float:
    p = float(param)
    if not math.isfinite(p) or p < 0.0:
        raise ValueError(f"adtw penalty must be finite and >= 0, got {param!r}")
    return p


@dataclass(frozen=True)
class DistanceSpec:
    """A distance family plus its parameter, enough to compute any pair.

    ``param`` is the band half-width for cdtw, the weight steepness for wdtw,
    the warping penalty for adtw, and must be None for sqed and dtw.
    """

    family: Family
    param: int | float | None = None

    def __post_init__(self):
        family = _coerce_family(self.family)
        object.__setattr__(self, "family", family)
        if family in (Family.SQED, Family.DTW):
            if self.param is not None:
                raise ValueError(f"{family.value} takes no parameter")
        elif self.param is None:
            raise ValueError(f"{family.value} requires a parameter")
        elif family is Family.CDTW:
            object.__setattr__(self, "param", _check_window(self.param))
        elif family is Family.WDTW:
            object.__setattr__(self, "param", _check_g(self.param))
        else:
            object.__setattr__(self, "param", _check_penalty(self.param))

    @classmethod
    def sqed(cls) -> "DistanceSpec":
        return cls(Family.SQED)

    @classmethod
    def dtw(cls) -> "DistanceSpec":
        return cls(Family.DTW)

    @classmethod
    def cdtw(cls, window: int) -> "DistanceSpec":
        return cls(Family.CDTW, window)

    @classmethod
    def wdtw(cls, g: float) -> "DistanceSpec":
        return cls(Family.WDTW, g)

    @classmethod
    def adtw(cls, penalty: float) -> "DistanceSpec":
        return cls(Family.ADTW, penalty)

    def describe(self) -> str:
        if self.param is None:
            return self.family.value
        return f"{self.family.value}({self.param!r})"


@lru_cache(maxsize=None)
def _weight_vector(g: float, length: int) -> np.ndarray:
    half = length / 2.0
    w = np.empty(length, dtype=np.float64)
    for delta in range(length):
        w[delta] = 1.0 / (1.0 + math.exp(-g * (delta - half)))
    w.setflags(write=False)
    return w


def weight_vector(g: float, length: int) -> np.ndarray:
    """Sigmoid weights by distance to the diagonal, cached per (g, length).

    ``weights[delta] = 1 / (1 + exp(-g * (delta - length / 2)))`` for
    ``delta`` in ``0 .. length - 1``. The returned array is read-only and
    shared between calls; concurrent lookups observe a single computation.
    """
    g = _check_g(g)
    if isinstance(length, bool) or not isinstance(length, (int, np.integer)):
        raise ValueError(f"length must be an integer, got {length!r}")
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    return _weight_vector(float(g), int(length))


def _require_equal_length(s, t) -> None:
    if s.shape[0] != t.shape[0]:
        raise LengthMismatchError(
            f"sqed requires equal lengths, got {s.shape[0]} and {t.shape[0]}"
        )


def _require_feasible_window(s, t, window: int) -> None:
    gap = abs(s.shape[0] - t.shape[0])
    if window < gap:
        raise UndefinedWindowError(
            f"window {window} cannot join series of lengths "
            f"{s.shape[0]} and {t.shape[0]} (needs >= {gap})"
        )


def sqed(s, t) -> float:
    """Squared Euclidean distance. Both series must have the same length."""
    s = as_series(s)
    t = as_series(t)
    _require_equal_length(s, t)
    return float(_k.sqed_ea(s, t, math.inf))


def dtw(s, t) -> float:
    """Dynamic time warping distance with squared-difference point cost."""
    s = as_series(s)
    t = as_series(t)
    return float(_k.dtw_ea(s, t, math.inf))


def cdtw(s, t, window: int) -> float:
    """DTW constrained to ``|i - j| <= window`` around the diagonal."""
    s = as_series(s)
    t = as_series(t)
    window = _check_window(window)
    _require_feasible_window(s, t, window)
    return float(_k.cdtw_ea(s, t, window, math.inf))


def wdtw(s, t, g: float) -> float:
    """Weighted DTW: cell costs scaled by a sigmoid of the diagonal offset.

    The weight vector spans the longer of the two lengths, so the weight of a
    given offset does not depend on argument order.
    """
    s = as_series(s)
    t = as_series(t)
    g = _check_g(g)
    weights = weight_vector(g, max(s.shape[0], t.shape[0]))
    return float(_k.wdtw_ea(s, t, weights, math.inf))


def adtw(s, t, penalty: float) -> float:
    """Amerced DTW: every off-diagonal step pays a fixed additive penalty."""
    s = as_series(s)
    t = as_series(t)
    penalty = _check_penalty(penalty)
    return float(_k.adtw_ea(s, t, penalty, math.inf))


def _binding(spec: DistanceSpec, len_a: int, len_b: int):
    """Kernel plus leading extra args for validated series of known lengths."""
    fam = spec.family
    if fam is Family.SQED:
        if len_a != len_b:
            raise LengthMismatchError(
                f"sqed requires equal lengths, got {len_a} and {len_b}"
            )
        return _k.sqed_ea, ()
    if fam is Family.DTW:
        return _k.dtw_ea, ()
    if fam is Family.CDTW:
        gap = abs(len_a - len_b)
        if spec.param < gap:
            raise UndefinedWindowError(
                f"window {spec.param} cannot join series of lengths "
                f"{len_a} and {len_b} (needs >= {gap})"
            )
        return _k.cdtw_ea, (spec.param,)
    if fam is Family.WDTW:
        return _k.wdtw_ea, (weight_vector(spec.param, max(len_a, len_b)),)
    return _k.adtw_ea, (spec.param,)


def distance(spec: DistanceSpec, s, t) -> float:
    """Distance between ``s`` and ``t`` under ``spec``."""
    s = as_series(s)
    t = as_series(t)
    kern, extra = _binding(spec, s.shape[0], t.shape[0])
    return float(kern(s, t, *extra, math.inf))


def distance_ea(spec: DistanceSpec, s, t, cutoff: float) -> float:
    """Early-abandoning distance.

    Returns the exact distance whenever it is <= ``cutoff`` (bit-equal to
    :func:`distance`), and +inf otherwise. ``cutoff`` must be >= 0; +inf
    disables abandoning entirely.
    """
    cutoff = float(cutoff)
    if math.isnan(cutoff) or cutoff < 0.0:
        raise ValueError(f"cutoff must be >= 0, got {cutoff!r}")
    s = as_series(s)
    t = as_series(t)
    kern, extra = _binding(spec, s.shape[0], t.shape[0])
    return float(kern(s, t, *extra, cutoff))


def cost_matrix(spec: DistanceSpec, s, t) -> np.ndarray:
    """Full (len(s) + 1) x (len(t) + 1) cost matrix including +inf borders.

    The bottom-right cell equals ``distance(spec, s, t)`` bit for bit; cells
    outside a cdtw band (or off the sqed diagonal) are +inf.
    """
    s = as_series(s)
    t = as_series(t)
    fam = spec.family
    if fam is Family.SQED:
        _require_equal_length(s, t)
        return _ref.sqed_matrix(s, t)
    if fam is Family.DTW:
        return _ref.dtw_matrix(s, t)
    if fam is Family.CDTW:
        _require_feasible_window(s, t, spec.param)
        return _ref.cdtw_matrix(s, t, spec.param)
    if fam is Family.WDTW:
        weights = weight_vector(spec.param, max(s.shape[0], t.shape[0]))
        return _ref.wdtw_matrix(s, t, weights)
    return _ref.adtw_matrix(s, t, spec.param)


def warping_path(spec: DistanceSpec, s, t) -> tuple[WarpingPath, float]:
    """Optimal alignment under ``spec`` plus its distance.

    Ties during backtracking prefer the diagonal predecessor, then the left
    (j - 1), then the top (i - 1). Re-accumulating the step costs along the
    returned path reproduces the distance exactly.
    """
    s = as_series(s)
    t = as_series(t)
    fam = spec.family
    if fam is Family.SQED:
        _require_equal_length(s, t)
        steps, mat = _ref.sqed_path(s, t)
    elif fam is Family.DTW:
        steps, mat = _ref.dtw_path(s, t)
    elif fam is Family.CDTW:
        _require_feasible_window(s, t, spec.param)
        steps, mat = _ref.cdtw_path(s, t, spec.param)
    elif fam is Family.WDTW:
        weights = weight_vector(spec.param, max(s.shape[0], t.shape[0]))
        steps, mat = _ref.wdtw_path(s, t, weights)
    else:
        steps, mat = _ref.adtw_path(s, t, spec.param)
    return WarpingPath(tuple(steps)), float(mat[-1, -1])


def format_cost_matrix(matrix) -> str:
    """Render a cost matrix as CSV text, one row per line, +inf as ``inf``."""
    mat = np.asarray(matrix, dtype=np.float64)
    if mat.ndim != 2:
        raise ValueError("cost matrix must be 2-D")
    lines = []
    for row in mat:
        lines.append(",".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"
