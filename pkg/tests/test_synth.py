import numpy as np

import elastic_dtw as ed
from elastic_dtw.synth import SUITE_NAMES, build_suite, warped_motif, write_suite
from elastic_dtw.ucr import admit, load_dataset


class TestWarpedMotif:
    def test_shapes_and_labels(self):
        pair = warped_motif()
        assert len(pair.train.series) == 12
        assert len(pair.test.series) == 12
        assert pair.train.length == 16
        assert pair.train.classes == ("one", "two")
        assert pair.train.class_counts == {"one": 6, "two": 6}

    def test_is_parameter_free_and_deterministic(self):
        a, b = warped_motif(), warped_motif()
        for x, y in zip(a.train.series, b.train.series):
            assert (x == y).all()

    def test_pointwise_neighbors_cross_class_boundaries(self):
        """Every test item's pointwise nearest neighbor has the wrong label."""
        pair = warped_motif()
        spec = ed.DistanceSpec.sqed()
        for query, true_label in zip(pair.test.series, pair.test.labels):
            label, _, dist = ed.nn1(pair.train, query, spec)
            assert label != true_label
            assert dist == 4.0

    def test_warp_tolerant_neighbors_stay_within_class(self):
        pair = warped_motif()
        spec = ed.DistanceSpec.adtw(0.5)
        for query, true_label in zip(pair.test.series, pair.test.labels):
            label, _, dist = ed.nn1(pair.train, query, spec)
            assert label == true_label
            assert dist == 1.0  # two penalized warps

    def test_every_train_item_has_an_exact_twin(self):
        pair = warped_motif()
        for idx, series in enumerate(pair.train.series):
            twins = [
                k
                for k, other in enumerate(pair.train.series)
                if k != idx and (other == series).all()
            ]
            assert len(twins) == 1


class TestSuite:
    def test_names_and_determinism(self, tmp_path):
        suite = build_suite(0)
        assert tuple(p.name for p in suite) == SUITE_NAMES
        again = build_suite(0)
        for a, b in zip(suite, again):
            for x, y in zip(a.train.series, b.train.series):
                assert (x == y).all()
            for x, y in zip(a.test.series, b.test.series):
                assert (x == y).all()

    def test_different_seed_changes_random_sets(self):
        a = build_suite(0)
        b = build_suite(1)
        changed = 0
        for pa, pb in zip(a, b):
            if pa.name == "WarpedMotif":
                for x, y in zip(pa.train.series, pb.train.series):
                    assert (x == y).all()  # construction, not sampling
                continue
            if any(
                (x != y).any() for x, y in zip(pa.train.series, pb.train.series)
            ):
                changed += 1
        assert changed == len(SUITE_NAMES) - 1

    def test_all_datasets_admissible(self):
        for pair in build_suite(0):
            ok, reason = admit(pair)
            assert ok, f"{pair.name}: {reason}"

    def test_written_suite_loads_back_identically(self, tmp_path):
        names = write_suite(tmp_path, seed=0)
        assert names == list(SUITE_NAMES)
        suite = build_suite(0)
        for pair in suite:
            loaded = load_dataset(tmp_path, pair.name)
            assert loaded.train.labels == pair.train.labels
            assert loaded.test.labels == pair.test.labels
            for a, b in zip(loaded.train.series, pair.train.series):
                assert (a == b).all()
            for a, b in zip(loaded.test.series, pair.test.series):
                assert (a == b).all()

    def test_two_class_balanced_splits(self):
        for pair in build_suite(0):
            counts = pair.train.class_counts
            assert len(counts) == 2
            sizes = set(counts.values())
            assert len(sizes) == 1  # balanced
