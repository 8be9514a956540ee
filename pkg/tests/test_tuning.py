import math
from fractions import Fraction

import numpy as np
import pytest

from elastic_dtw import DistanceSpec, Family, sqed
from elastic_dtw.core import DatasetError, LabeledDataset
from elastic_dtw.synth import warped_motif
from elastic_dtw.tuning import (
    TuningConfig,
    adtw_penalty_candidates,
    cdtw_window_candidates,
    sample_omega_prime,
    tune,
    wdtw_g_candidates,
    _select,
)


def _dataset(series, labels, name="tune-me"):
    return LabeledDataset(
        name=name,
        split="train",
        series=tuple(np.asarray(x, dtype=np.float64) for x in series),
        labels=tuple(labels),
    )


class TestWindowGrid:
    def test_length_100_is_every_integer(self):
        assert cdtw_window_candidates(100) == tuple(range(101))

    def test_short_lengths_deduplicate(self):
        for length in (1, 2, 3, 7, 37, 64, 250):
            grid = cdtw_window_candidates(length)
            expected = []
            for i in range(101):
                w = math.floor(Fraction(i * length, 100))
                if not expected or expected[-1] != w:
                    expected.append(w)
            assert grid == tuple(expected)
            assert grid[0] == 0
            assert grid[-1] == length
            assert all(a < b for a, b in zip(grid, grid[1:]))

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            cdtw_window_candidates(0)
        with pytest.raises(ValueError):
            cdtw_window_candidates(10, count=0)


class TestSteepnessGrid:
    def test_exact_hundredths(self):
        grid = wdtw_g_candidates()
        assert len(grid) == 100
        assert grid[0] == 0.01
        assert grid[-1] == 1.0
        for k, g in enumerate(grid, start=1):
            assert g == k / 100


class TestPenaltyLadder:
    def test_unit_scale_spans_ten_decades(self):
        ladder = adtw_penalty_candidates(1.0, TuningConfig())
        assert len(ladder) == 100
        assert ladder[0] == pytest.approx(1e-10, rel=1e-9)
        assert ladder[-1] == 1.0
        assert all(a < b for a, b in zip(ladder, ladder[1:]))
        assert ladder[49] == 0.5**5

    def test_scale_multiplies_linearly(self):
        base = adtw_penalty_candidates(1.0, TuningConfig())
        scaled = adtw_penalty_candidates(32.0, TuningConfig())
        for b, s in zip(base, scaled):
            assert s == pytest.approx(32.0 * b, rel=1e-15)

    def test_exponent_one_is_linear(self):
        cfg = TuningConfig(exponent=1.0)
        ladder = adtw_penalty_candidates(100.0, cfg)
        assert ladder[0] == pytest.approx(1.0, rel=1e-15)
        assert ladder[-1] == 100.0

    def test_rejects_bad_scale(self):
        with pytest.raises(ValueError):
            adtw_penalty_candidates(-1.0, TuningConfig())
        with pytest.raises(ValueError):
            adtw_penalty_candidates(math.nan, TuningConfig())


class TestConfigValidation:
    def test_defaults(self):
        cfg = TuningConfig()
        assert cfg.exponent == 5.0
        assert cfg.candidate_count == 100
        assert cfg.pair_sample_size == 4000
        assert cfg.rng_seed == 0

    def test_rejects_bad_values(self):
        with pytest.raises(ValueError):
            TuningConfig(exponent=0.0)
        with pytest.raises(ValueError):
            TuningConfig(exponent=math.inf)
        with pytest.raises(ValueError):
            TuningConfig(candidate_count=0)
        with pytest.raises(ValueError):
            TuningConfig(pair_sample_size=0)


class TestPenaltyScale:
    def test_exhaustive_mean_over_all_pairs(self):
        rng = np.random.default_rng(97)
        series = [rng.uniform(-1, 1, 8) for _ in range(7)]
        ds = _dataset(series, ["a", "b", "a", "b", "a", "b", "a"])
        got = sample_omega_prime(ds, TuningConfig())
        acc = 0.0
        count = 0
        for i in range(7):
            for j in range(i + 1, 7):
                acc += sqed(series[i], series[j])
                count += 1
        assert got == pytest.approx(acc / count, rel=1e-12)

    def test_sampled_mean_is_seeded_and_bounded(self):
        rng = np.random.default_rng(101)
        series = [rng.uniform(-1, 1, 6) for _ in range(12)]
        ds = _dataset(series, ["a", "b"] * 6)
        cfg = TuningConfig(pair_sample_size=10, rng_seed=5)
        got1 = sample_omega_prime(ds, cfg)
        got2 = sample_omega_prime(ds, cfg)
        assert got1 == got2
        other = sample_omega_prime(ds, TuningConfig(pair_sample_size=10, rng_seed=6))
        assert other != got1
        all_pairs = [
            sqed(series[i], series[j])
            for i in range(12)
            for j in range(i + 1, 12)
        ]
        assert min(all_pairs) <= got1 <= max(all_pairs)

    def test_sampled_draws_replay(self):
        """Sampling draws distinct index pairs from the seeded generator."""
        rng = np.random.default_rng(103)
        series = [rng.uniform(-1, 1, 5) for _ in range(11)]
        ds = _dataset(series, ["a", "b", "a", "b", "a", "b", "a", "b", "a", "b", "a"])
        cfg = TuningConfig(pair_sample_size=9, rng_seed=77)
        got = sample_omega_prime(ds, cfg)
        replay = np.random.default_rng(77)
        acc = 0.0
        for _ in range(9):
            i = int(replay.integers(0, 11))
            j = int(replay.integers(0, 10))
            if j >= i:
                j += 1
            assert i != j
            acc += sqed(series[i], series[j])
        assert got == pytest.approx(acc / 9, rel=1e-12)

    def test_rejects_degenerate_datasets(self):
        with pytest.raises(DatasetError):
            sample_omega_prime(_dataset([[1.0, 2.0]], ["a"]))
        with pytest.raises(DatasetError):
            sample_omega_prime(_dataset([[1.0], [1.0, 2.0]], ["a", "b"]))
        with pytest.raises(DatasetError):
            sample_omega_prime(
                _dataset([[1.0, float("nan")], [1.0, 2.0]], ["a", "b"])
            )


class TestTieBreaks:
    def test_median_of_all_tied_is_lower_middle(self):
        scores = [1.0] * 100
        assert _select(Family.ADTW, list(range(100)), scores) == 49
        assert _select(Family.ADTW, list(range(5)), [1.0] * 5) == 2
        assert _select(Family.ADTW, list(range(4)), [1.0] * 4) == 1
        assert _select(Family.ADTW, [7], [0.5]) == 0

    def test_median_applies_only_to_the_tied_block(self):
        scores = [0.2, 0.9, 0.9, 0.9, 0.1]
        assert _select(Family.ADTW, list(range(5)), scores) == 2

    def test_other_families_take_smallest(self):
        assert _select(Family.CDTW, list(range(6)), [1.0] * 6) == 0
        assert _select(Family.WDTW, list(range(6)), [1.0] * 6) == 0
        scores = [0.3, 0.8, 0.8]
        assert _select(Family.CDTW, list(range(3)), scores) == 1


class TestEndToEnd:
    def test_all_tied_motif_picks_median_penalty(self):
        pair = warped_motif()
        result = tune(pair.train, "adtw", TuningConfig())
        cands = [c for c, _ in result.candidate_scores]
        scores = [s for _, s in result.candidate_scores]
        assert scores == [1.0] * 100
        assert result.chosen.param == cands[49]
        assert result.omega_prime == pytest.approx(688.0 / 66.0, rel=1e-12)
        assert result.chosen.param == pytest.approx(
            (688.0 / 66.0) * 0.5**5, rel=1e-12
        )

    def test_all_tied_motif_picks_smallest_window_and_g(self):
        pair = warped_motif()
        assert tune(pair.train, "cdtw", TuningConfig()).chosen.param == 0
        assert tune(pair.train, "wdtw", TuningConfig()).chosen.param == 0.01

    def test_window_zero_only_dataset(self):
        """Only the rigid band separates the classes here."""
        ds = _dataset(
            [
                [0.0, 10.0, 0.0, 0.0, 0.0],
                [0.0, 11.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 10.0, 0.0, 0.0],
                [0.0, 0.0, 11.0, 0.0, 0.0],
            ],
            ["a", "a", "b", "b"],
        )
        result = tune(ds, "cdtw", TuningConfig())
        assert result.chosen.param == 0
        by_param = dict(result.candidate_scores)
        assert by_param[0] == 1.0
        assert by_param[1] == 0.0

    def test_fixed_families_are_not_tunable(self):
        pair = warped_motif()
        for family in ("sqed", "dtw"):
            with pytest.raises(ValueError):
                tune(pair.train, family, TuningConfig())

    def test_cdtw_needs_fixed_length(self):
        ds = _dataset([[1.0, 2.0], [1.0, 2.0, 3.0], [2.0, 1.0]], ["a", "b", "a"])
        with pytest.raises(DatasetError):
            tune(ds, "cdtw", TuningConfig())

    def test_result_csv_shape(self):
        pair = warped_motif()
        result = tune(pair.train, "adtw", TuningConfig())
        lines = result.to_csv().strip().split("\n")
        assert lines[0] == "family,chosen_param,omega_prime,seed,exponent"
        assert lines[1].startswith("adtw,")
        assert lines[2] == "param,accuracy"
        assert len(lines) == 3 + 100
        param, accuracy = lines[3].split(",")
        assert float(accuracy) == 1.0
        assert float(param) > 0.0

    def test_chosen_spec_is_usable(self):
        pair = warped_motif()
        result = tune(pair.train, "wdtw", TuningConfig())
        assert isinstance(result.chosen, DistanceSpec)
        assert result.best_accuracy == 1.0
