"""Deterministic synthetic datasets in UCR layout for desk-scale benchmarks.

Six small two-class problems with different temporal structure, so the
distance families spread out: some are solved by plain pointwise comparison,
others need warping, and ``WarpedMotif`` is built so that pointwise
comparison fails outright. Every generator is a pure function of the seed;
``write_suite`` materializes the whole collection as
``<root>/<Name>/<Name>_TRAIN.tsv`` plus the matching test files.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .core import LabeledDataset
from .ucr import DatasetPair, write_split

__all__ = ["warped_motif", "build_suite", "write_suite", "SUITE_NAMES"]

SUITE_NAMES = (
    "AmpCluster",
    "PhaseSine",
    "SpikeShift",
    "StepRamp",
    "TwinPeaks",
    "WarpedMotif",
)


def _pair(name: str, train_items, test_items) -> DatasetPair:
    return DatasetPair(
        name=name,
        train=LabeledDataset(
            name=name,
            split="train",
            series=tuple(values for values, _ in train_items),
            labels=tuple(label for _, label in train_items),
        ),
        test=LabeledDataset(
            name=name,
            split="test",
            series=tuple(values for values, _ in test_items),
            labels=tuple(label for _, label in test_items),
        ),
    )


def warped_motif() -> DatasetPair:
    """Dip motifs whose position shifts by one step between train and test.

    Class ``one`` carries a single unit dip in a flat series, class ``two``
    a second dip four steps later. Test positions sit between the train
    positions of their own class but on top of train positions of the other
    class, so the nearest pointwise neighbor always has the wrong label
    while any warping-tolerant measure aligns the dips at a small cost.
    """
    length = 16

    def one(p: int) -> np.ndarray:
        v = np.ones(length)
        v[p - 1] = -1.0
        return v

    def two(p: int) -> np.ndarray:
        v = np.ones(length)
        v[p - 1] = -1.0
        v[p + 3] = -1.0
        return v

    train = [(one(p), "one") for p in (4, 4, 6, 6, 8, 8)]
    train += [(two(p), "two") for p in (5, 5, 7, 7, 9, 9)]
    test = [(one(p), "one") for p in (5, 5, 7, 7, 9, 9)]
    test += [(two(p), "two") for p in (4, 4, 6, 6, 8, 8)]
    return _pair("WarpedMotif", train, test)


def _amp_cluster(rng: np.random.Generator) -> DatasetPair:
    length = 24
    t = np.arange(length)
    base = np.sin(2.0 * np.pi * t / 12.0)

    def item(amp: float) -> np.ndarray:
        return amp * base + rng.normal(0.0, 0.3, length)

    def batch(n, amp, label):
        return [(item(amp), label) for _ in range(n)]

    train = batch(8, 1.0, "1") + batch(8, 1.3, "2")
    test = batch(10, 1.0, "1") + batch(10, 1.3, "2")
    return _pair("AmpCluster", train, test)


def _phase_sine(rng: np.random.Generator) -> DatasetPair:
    length = 32
    t = np.arange(length)

    def item(shift: float) -> np.ndarray:
        phase = shift + rng.uniform(0.0, 0.9)
        return np.sin(2.0 * np.pi * t / 16.0 + phase) + rng.normal(0.0, 0.25, length)

    def batch(n, shift, label):
        return [(item(shift), label) for _ in range(n)]

    train = batch(8, 0.0, "1") + batch(8, 1.4, "2")
    test = batch(10, 0.0, "1") + batch(10, 1.4, "2")
    return _pair("PhaseSine", train, test)


def _spike_shift(rng: np.random.Generator) -> DatasetPair:
    length = 24

    def item(center: int) -> np.ndarray:
        v = rng.normal(0.0, 0.3, length)
        pos = center + int(rng.integers(-3, 4))
        v[pos] += 2.0
        v[pos - 1] += 1.0
        v[pos + 1] += 1.0
        return v

    def batch(n, center, label):
        return [(item(center), label) for _ in range(n)]

    train = batch(8, 8, "1") + batch(8, 14, "2")
    test = batch(10, 8, "1") + batch(10, 14, "2")
    return _pair("SpikeShift", train, test)


def _step_ramp(rng: np.random.Generator) -> DatasetPair:
    length = 24
    t = np.arange(length)

    def step() -> np.ndarray:
        cut = 12 + int(rng.integers(-4, 5))
        v = np.where(t < cut, 0.0, 1.0) + rng.normal(0.0, 0.25, length)
        return v

    def ramp() -> np.ndarray:
        return t / (length - 1.0) + rng.normal(0.0, 0.25, length)

    train = [(step(), "1") for _ in range(8)] + [(ramp(), "2") for _ in range(8)]
    test = [(step(), "1") for _ in range(10)] + [(ramp(), "2") for _ in range(10)]
    return _pair("StepRamp", train, test)


def _twin_peaks(rng: np.random.Generator) -> DatasetPair:
    length = 30
    t = np.arange(length)

    def bump(center: float) -> np.ndarray:
        return np.exp(-0.5 * ((t - center) / 2.0) ** 2)

    def single() -> np.ndarray:
        c = 13.0 + rng.uniform(-4.0, 4.0)
        return 1.2 * bump(c) + rng.normal(0.0, 0.2, length)

    def double() -> np.ndarray:
        c = 10.0 + rng.uniform(-3.0, 3.0)
        return bump(c) + bump(c + 7.0) + rng.normal(0.0, 0.2, length)

    train = [(single(), "1") for _ in range(8)] + [(double(), "2") for _ in range(8)]
    test = [(single(), "1") for _ in range(10)] + [(double(), "2") for _ in range(10)]
    return _pair("TwinPeaks", train, test)


def build_suite(seed: int = 0) -> list[DatasetPair]:
    """All suite datasets, in :data:`SUITE_NAMES` order, for a given seed."""
    generators = {
        "AmpCluster": _amp_cluster,
        "PhaseSine": _phase_sine,
        "SpikeShift": _spike_shift,
        "StepRamp": _step_ramp,
        "TwinPeaks": _twin_peaks,
    }
    out = []
    for idx, name in enumerate(SUITE_NAMES):
        if name == "WarpedMotif":
            out.append(warped_motif())
        else:
            rng = np.random.default_rng([int(seed), idx])
            out.append(generators[name](rng))
    return out


def write_suite(root, seed: int = 0) -> list[str]:
    """Write the suite under ``root`` in UCR layout; returns dataset names."""
    root = Path(root)
    names = []
    for pair in build_suite(seed):
        folder = root / pair.name
        folder.mkdir(parents=True, exist_ok=True)
        write_split(pair.train, folder / f"{pair.name}_TRAIN.tsv")
        write_split(pair.test, folder / f"{pair.name}_TEST.tsv")
        names.append(pair.name)
    return names
