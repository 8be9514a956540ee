"""Parameter tuning by leave-one-out 1-NN accuracy over fixed candidate grids.

Grids
-----
* cdtw: band widths ``floor(i * len / count)`` for ``i = 0 .. count``,
  deduplicated, ascending. With the default count of 100 a length-100
  dataset yields the 101 integer widths 0 .. 100.
* wdtw: weight steepness ``i / count`` for ``i = 1 .. count``
  (0.01 .. 1.00 by default).
* adtw: penalties ``scale * (i / count) ** exponent`` for ``i = 1 .. count``,
  where the scale is the mean squared Euclidean distance over a seeded
  sample of training pairs. With the defaults (count 100, exponent 5) the
  ratio ladder spans 1e-10 .. 1.

Selection maximizes leave-one-out accuracy. Ties are broken toward the
median tied candidate for adtw (lower middle on even counts) and toward the
smallest parameter for cdtw and wdtw.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as _k
from .classify import loocv_accuracy
from .core import DatasetError, LabeledDataset
from .distances import DistanceSpec, Family, _coerce_family

__all__ = [
    "TuningConfig",
    "TuningResult",
    "cdtw_window_candidates",
    "wdtw_g_candidates",
    "sample_omega_prime",
    "adtw_penalty_candidates",
    "tune",
]

_TUNABLE = (Family.CDTW, Family.WDTW, Family.ADTW)


@dataclass(frozen=True)
class TuningConfig:
    """Knobs of the tuning procedure; the defaults match the evaluation setup."""

    exponent: float = 5.0
    candidate_count: int = 100
    pair_sample_size: int = 4000
    rng_seed: int = 0

    def __post_init__(self):
        if not math.isfinite(self.exponent) or self.exponent <= 0:
            raise ValueError(f"exponent must be finite and > 0, got {self.exponent!r}")
        if self.candidate_count < 1:
            raise ValueError(f"candidate_count must be >= 1, got {self.candidate_count}")
        if self.pair_sample_size < 1:
            raise ValueError(f"pair_sample_size must be >= 1, got {self.pair_sample_size}")
        if not 0 <= int(self.rng_seed) < 2**64:
            raise ValueError(f"rng_seed must fit in 64 bits, got {self.rng_seed!r}")


@dataclass(frozen=True)
class TuningResult:
    """Chosen spec plus the full candidate score curve that produced it."""

    chosen: DistanceSpec
    candidate_scores: tuple[tuple[int | float, float], ...]
    omega_prime: float | None
    config: TuningConfig

    @property
    def best_accuracy(self) -> float:
        return max(score for _, score in self.candidate_scores)

    def to_csv(self) -> str:
        scale = "" if self.omega_prime is None else repr(float(self.omega_prime))
        param = self.chosen.param
        chosen = repr(float(param)) if isinstance(param, float) else str(param)
        lines = [
            "family,chosen_param,omega_prime,seed,exponent",
            f"{self.chosen.family.value},{chosen},{scale},"
            f"{self.config.rng_seed},{float(self.config.exponent)!r}",
            "param,accuracy",
        ]
        for cand, score in self.candidate_scores:
            cell = repr(float(cand)) if isinstance(cand, float) else str(cand)
            lines.append(f"{cell},{float(score)!r}")
        return "\n".join(lines) + "\n"


def cdtw_window_candidates(length: int, count: int = 100) -> tuple[int, ...]:
    """Ascending deduplicated band widths ``floor(i * length / count)``."""
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    seen = []
    for i in range(count + 1):
        w = (i * length) // count
        if not seen or seen[-1] != w:
            seen.append(w)
    return tuple(seen)


def wdtw_g_candidates(count: int = 100) -> tuple[float, ...]:
    """Weight steepness grid ``i / count`` for ``i = 1 .. count``."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    return tuple(i / count for i in range(1, count + 1))


def sample_omega_prime(train: LabeledDataset, cfg: TuningConfig = TuningConfig()) -> float:
    """Mean squared Euclidean distance over a seeded sample of train pairs.

    When the number of distinct pairs is at most ``cfg.pair_sample_size``
    every pair contributes once (no randomness); otherwise
    ``cfg.pair_sample_size`` pairs of distinct items are drawn uniformly
    with replacement from a generator seeded with ``cfg.rng_seed``.
    """
    if train.has_missing:
        raise DatasetError(f"dataset {train.name!r} has missing values")
    if train.variable_length:
        raise DatasetError(f"dataset {train.name!r} has variable-length series")
    n = len(train)
    if n < 2:
        raise DatasetError("penalty scale needs at least two series")
    total_pairs = n * (n - 1) // 2
    acc = 0.0
    if total_pairs <= cfg.pair_sample_size:
        for i in range(n):
            for j in range(i + 1, n):
                acc += _k.sqed_ea(train.series[i], train.series[j], math.inf)
        return acc / total_pairs
    rng = np.random.default_rng(int(cfg.rng_seed))
    k = cfg.pair_sample_size
    for _ in range(k):
        i = int(rng.integers(0, n))
        j = int(rng.integers(0, n - 1))
        if j >= i:
            j += 1
        acc += _k.sqed_ea(train.series[i], train.series[j], math.inf)
    return acc / k


def adtw_penalty_candidates(
    omega_prime: float, cfg: TuningConfig = TuningConfig()
) -> tuple[float, ...]:
    """Penalty ladder ``omega_prime * (i / count) ** exponent``, ascending."""
    scale = float(omega_prime)
    if not math.isfinite(scale) or scale < 0.0:
        raise ValueError(f"omega_prime must be finite and >= 0, got {omega_prime!r}")
    count = cfg.candidate_count
    return tuple(scale * (i / count) ** cfg.exponent for i in range(1, count + 1))


def _select(family: Family, candidates, scores) -> int:
    """Index of the winning candidate under the family's tie-break rule."""
    best = max(scores)
    tied = [k for k, sc in enumerate(scores) if sc == best]
    if family is Family.ADTW:
        return tied[(len(tied) - 1) // 2]
    return tied[0]


def tune(
    train: LabeledDataset,
    family: Family | str,
    cfg: TuningConfig = TuningConfig(),
) -> TuningResult:
    """Pick the best parameter for ``family`` on ``train`` by leave-one-out.

    Only cdtw, wdtw and adtw have a parameter to tune; sqed and dtw raise.
    The chosen parameter always comes from the candidate grid, and
    ``candidate_scores`` holds one (parameter, accuracy) entry per candidate
    in grid order.
    """
    family = _coerce_family(family)
    if family not in _TUNABLE:
        raise ValueError(f"{family.value} has no tunable parameter")
    if len(train) < 2:
        raise DatasetError("tuning needs at least two training items")
    omega_prime = None
    if family is Family.CDTW:
        length = train.length
        if length is None:
            raise DatasetError(f"dataset {train.name!r} has variable-length series")
        candidates = cdtw_window_candidates(length, cfg.candidate_count)
    elif family is Family.WDTW:
        candidates = wdtw_g_candidates(cfg.candidate_count)
    else:
        omega_prime = sample_omega_prime(train, cfg)
        candidates = adtw_penalty_candidates(omega_prime, cfg)
    scores = [loocv_accuracy(train, DistanceSpec(family, cand)) for cand in candidates]
    winner = _select(family, candidates, scores)
    return TuningResult(
        chosen=DistanceSpec(family, candidates[winner]),
        candidate_scores=tuple(zip(candidates, scores)),
        omega_prime=omega_prime,
        config=cfg,
    )
