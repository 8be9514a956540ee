import dataclasses

import numpy as np
import pytest

from elastic_dtw import Family
from elastic_dtw.benchmark import (
    FAMILY_ORDER,
    canonical_families,
    run_benchmark,
    _derive_seed,
)
from elastic_dtw.core import DatasetError, LabeledDataset
from elastic_dtw.synth import build_suite, warped_motif
from elastic_dtw.tuning import TuningConfig
from elastic_dtw.ucr import DatasetPair


def _small_suite():
    suite = build_suite(0)
    by_name = {p.name: p for p in suite}
    return [by_name["WarpedMotif"], by_name["SpikeShift"], by_name["AmpCluster"]]


def _bad_pair():
    return DatasetPair(
        name="OneClass",
        train=LabeledDataset(
            name="OneClass",
            split="train",
            series=(np.array([1.0, 2.0]), np.array([2.0, 1.0])),
            labels=("a", "a"),
        ),
        test=LabeledDataset(
            name="OneClass",
            split="test",
            series=(np.array([1.0, 2.0]),),
            labels=("a",),
        ),
    )


class TestFamilyOrdering:
    def test_canonical_order_is_fixed(self):
        assert canonical_families(["adtw", "sqed", "dtw"]) == (
            Family.SQED,
            Family.DTW,
            Family.ADTW,
        )
        assert canonical_families(list(Family)) == FAMILY_ORDER

    def test_duplicates_collapse(self):
        assert canonical_families(["dtw", "dtw"]) == (Family.DTW,)

    def test_unknown_family_rejected(self):
        with pytest.raises(ValueError):
            canonical_families(["nope"])


class TestSeedDerivation:
    def test_stable_per_name(self):
        assert _derive_seed(0, "WarpedMotif") == _derive_seed(0, "WarpedMotif")
        assert _derive_seed(0, "A") != _derive_seed(0, "B")
        assert _derive_seed(1, "A") != _derive_seed(0, "A")

    def test_fits_in_uint64(self):
        for name in ("a", "b", "a-long-dataset-name"):
            assert 0 <= _derive_seed(123, name) < 2**64


class TestRunBenchmark:
    def test_matrix_is_complete_and_bounded(self):
        result = run_benchmark(_small_suite(), list(Family), TuningConfig())
        mat = result.accuracy_matrix
        assert mat.datasets == ("AmpCluster", "SpikeShift", "WarpedMotif")
        assert mat.classifiers == ("sqed", "dtw", "cdtw", "wdtw", "adtw")
        assert np.isfinite(mat.values).all()
        assert (mat.values >= 0.0).all() and (mat.values <= 1.0).all()
        assert len(result.cells) == 15
        assert result.failures == ()
        assert result.excluded == ()

    def test_rerun_is_identical(self):
        r1 = run_benchmark(_small_suite(), list(Family), TuningConfig())
        r2 = run_benchmark(_small_suite(), list(Family), TuningConfig())
        assert (r1.accuracy_matrix.values == r2.accuracy_matrix.values).all()
        for c1, c2 in zip(r1.cells, r2.cells):
            assert (c1.dataset, c1.family, c1.spec, c1.accuracy) == (
                c2.dataset,
                c2.family,
                c2.spec,
                c2.accuracy,
            )

    def test_parallel_equals_serial(self):
        r1 = run_benchmark(_small_suite(), list(Family), TuningConfig(), jobs=1)
        r2 = run_benchmark(_small_suite(), list(Family), TuningConfig(), jobs=3)
        assert (r1.accuracy_matrix.values == r2.accuracy_matrix.values).all()
        assert [c.spec for c in r1.cells] == [c.spec for c in r2.cells]

    def test_input_order_does_not_matter(self):
        suite = _small_suite()
        r1 = run_benchmark(suite, list(Family), TuningConfig())
        r2 = run_benchmark(suite[::-1], list(Family), TuningConfig())
        assert r1.accuracy_matrix.datasets == r2.accuracy_matrix.datasets
        assert (r1.accuracy_matrix.values == r2.accuracy_matrix.values).all()

    def test_inadmissible_datasets_are_excluded_not_fatal(self):
        messages = []
        result = run_benchmark(
            [_bad_pair(), warped_motif()],
            ["sqed", "adtw"],
            TuningConfig(),
            progress=lambda name, msg: messages.append((name, msg)),
        )
        assert result.accuracy_matrix.datasets == ("WarpedMotif",)
        assert len(result.excluded) == 1
        name, reason = result.excluded[0]
        assert name == "OneClass"
        assert reason
        assert any("excluded" in msg for n, msg in messages if n == "OneClass")
        assert {m["name"] for m in result.metadata} == {"OneClass", "WarpedMotif"}

    def test_all_excluded_raises(self):
        with pytest.raises(DatasetError):
            run_benchmark([_bad_pair()], ["sqed"], TuningConfig())

    def test_subset_of_families(self):
        result = run_benchmark([warped_motif()], ["adtw", "sqed"], TuningConfig())
        assert result.accuracy_matrix.classifiers == ("sqed", "adtw")
        assert result.comparison.best is not None
        assert result.comparison.best.target == "adtw"

    def test_single_family_has_no_pairwise_tests(self):
        result = run_benchmark([warped_motif()], ["dtw"], TuningConfig())
        assert result.comparison.pairwise == ()
        assert result.comparison.best is None

    def test_motif_accuracies(self):
        result = run_benchmark([warped_motif()], list(Family), TuningConfig())
        row = dict(zip(result.accuracy_matrix.classifiers, result.accuracy_matrix.values[0]))
        assert row["sqed"] == 0.0
        assert row["adtw"] == 1.0
        assert row["adtw"] >= row["sqed"]

    def test_cells_carry_tuning_results(self):
        result = run_benchmark([warped_motif()], list(Family), TuningConfig())
        by_family = {c.family: c for c in result.cells}
        assert by_family["sqed"].tuning is None
        assert by_family["dtw"].tuning is None
        for fam in ("cdtw", "wdtw", "adtw"):
            assert by_family[fam].tuning is not None
            assert len(by_family[fam].tuning.candidate_scores) >= 6
        assert by_family["adtw"].tuning.omega_prime is not None

    def test_holm_is_applied_across_all_pairs(self):
        result = run_benchmark(_small_suite(), list(Family), TuningConfig())
        tests = result.comparison.pairwise
        assert len(tests) == 10
        for t in tests:
            assert t.p_holm >= t.p_raw - 1e-15
            assert 0.0 <= t.p_holm <= 1.0

    def test_alpha_controls_significance_flag(self):
        """Significance is strict: adjusted p must fall below alpha."""
        r = run_benchmark(_small_suite(), list(Family), TuningConfig(), alpha=1.0)
        assert all(t.significant == (t.p_holm < 1.0) for t in r.comparison.pairwise)
        r0 = run_benchmark(_small_suite(), list(Family), TuningConfig(), alpha=0.0)
        assert not any(t.significant for t in r0.comparison.pairwise)


class TestErrorIsolation:
    def test_failing_dataset_recorded_and_others_survive(self, monkeypatch):
        import elastic_dtw.benchmark as bench

        real = bench._run_cell

        def boom(pair, family, cfg):
            if pair.name == "WarpedMotif" and str(family) == "adtw":
                raise RuntimeError("synthetic failure")
            return real(pair, family, cfg)

        monkeypatch.setattr(bench, "_run_cell", boom)
        result = run_benchmark(
            [warped_motif(), _small_suite()[1]], ["sqed", "adtw"], TuningConfig()
        )
        assert result.accuracy_matrix.datasets == ("SpikeShift",)
        assert len(result.failures) == 1
        name, message = result.failures[0]
        assert name == "WarpedMotif"
        assert "synthetic failure" in message
