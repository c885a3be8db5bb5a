"""Sliding-window analysis, period clustering, trajectories."""

from datetime import datetime, timedelta

import numpy as np
import pytest

import cecp
from cecp.errors import InsufficientDataError, InvalidInputError
from cecp.prng import SplitMix64


def noise_series(seed, length, label="noise"):
    rng = SplitMix64(seed)
    return cecp.RawSeries(values=[rng.random() for _ in range(length)], label=label)


class TestAnalysisConfig:
    def test_defaults(self):
        cfg = cecp.AnalysisConfig()
        assert (cfg.dimension, cfg.delay, cfg.window_length, cfg.step, cfg.period_size) == (
            4, 1, 300, 20, 16
        )
        assert cfg.max_windows is None

    def test_window_must_hold_one_pattern(self):
        cecp.AnalysisConfig(dimension=4, delay=3, window_length=10)
        with pytest.raises(InvalidInputError):
            cecp.AnalysisConfig(dimension=4, delay=3, window_length=9)

    def test_invalid_fields_rejected(self):
        with pytest.raises(InvalidInputError):
            cecp.AnalysisConfig(dimension=1)
        with pytest.raises(InvalidInputError):
            cecp.AnalysisConfig(delay=0)
        with pytest.raises(InvalidInputError):
            cecp.AnalysisConfig(step=0)
        with pytest.raises(InvalidInputError):
            cecp.AnalysisConfig(period_size=0)
        with pytest.raises(InvalidInputError):
            cecp.AnalysisConfig(max_windows=0)


class TestWindowCount:
    def test_series_equal_to_window_gives_one(self):
        assert cecp.window_count(300, 300, 20) == 1

    def test_three_windows_from_350_points(self):
        assert cecp.window_count(350, 300, 20) == 3

    def test_long_panel_count(self):
        assert cecp.window_count(3851, 300, 20) == 178

    def test_short_series_gives_zero(self):
        assert cecp.window_count(299, 300, 20) == 0


class TestSlidingAnalysis:
    def test_offsets_follow_the_step(self):
        series = noise_series(1, 350)
        results = cecp.sliding_analysis(series)
        assert [w.index for w in results] == [0, 1, 2]
        assert [w.start_offset for w in results] == [0, 20, 40]
        assert all(w.end_offset - w.start_offset == 300 for w in results)

    def test_single_window_boundary(self):
        results = cecp.sliding_analysis(noise_series(2, 300))
        assert len(results) == 1
        assert results[0].start_offset == 0
        assert results[0].end_offset == 300

    def test_too_short_series_raises_with_label(self):
        with pytest.raises(InsufficientDataError) as err:
            cecp.sliding_analysis(noise_series(3, 299, label="GBP_3M"))
        assert "GBP_3M" in str(err.value)

    def test_windows_match_independent_recomputation(self):
        series = noise_series(4, 700)
        cfg = cecp.AnalysisConfig(window_length=300, step=50)
        for w in cecp.sliding_analysis(series, cfg):
            piece = series.values[w.start_offset:w.end_offset]
            dist = cecp.pattern_distribution(piece, cfg.dimension, cfg.delay)
            assert w.quantifiers == cecp.Quantifiers.from_distribution(dist)

    def test_parallel_equals_serial_exactly(self):
        series = noise_series(5, 2000)
        serial = cecp.sliding_analysis(series)
        threaded = cecp.sliding_analysis(series, workers=4)
        assert serial == threaded

    def test_max_windows_caps_output(self):
        series = noise_series(6, 3851)
        cfg = cecp.AnalysisConfig(max_windows=177)
        results = cecp.sliding_analysis(series, cfg)
        assert len(results) == 177
        assert results[-1].index == 176

    def test_timestamps_carried_from_series(self):
        start = datetime(2010, 1, 4)
        stamps = tuple(start + timedelta(days=i) for i in range(350))
        series = cecp.RawSeries(
            values=np.random.default_rng(0).random(350), timestamps=stamps, label="x"
        )
        results = cecp.sliding_analysis(series)
        assert results[0].start_timestamp == stamps[0]
        assert results[0].end_timestamp == stamps[299]
        assert results[1].start_timestamp == stamps[20]
        assert results[2].end_timestamp == stamps[339]

    def test_invalid_workers_rejected(self):
        with pytest.raises(InvalidInputError):
            cecp.sliding_analysis(noise_series(7, 400), workers=0)


class TestGroupPeriods:
    def build(self, n):
        series = noise_series(8, 300 + 20 * (n - 1))
        results = cecp.sliding_analysis(series)
        assert len(results) == n
        return results

    def test_exact_multiple_forms_equal_blocks(self):
        clusters = cecp.group_periods(self.build(16), 16)
        assert [c.size for c in clusters] == [16]
        assert clusters[0].period_id == 1

    def test_remainder_absorbed_into_last_period(self):
        clusters = cecp.group_periods(self.build(33), 16)
        assert [c.size for c in clusters] == [16, 17]

    def test_panel_scale_grouping(self):
        clusters = cecp.group_periods(self.build(177), 16)
        assert len(clusters) == 11
        assert [c.size for c in clusters] == [16] * 10 + [17]

    def test_fewer_windows_than_period_size_form_one_period(self):
        clusters = cecp.group_periods(self.build(5), 16)
        assert [c.size for c in clusters] == [5]

    def test_partition_is_contiguous_and_complete(self):
        results = self.build(40)
        clusters = cecp.group_periods(results, 12)
        covered = [i for c in clusters for i in c.window_indices]
        assert covered == [w.index for w in results]
        assert [c.period_id for c in clusters] == [1, 2, 3]

    def test_centroids_are_arithmetic_means(self):
        results = self.build(33)
        for cluster in cecp.group_periods(results, 16):
            members = [results[i] for i in cluster.window_indices]
            mean_h = sum(w.entropy for w in members) / len(members)
            mean_c = sum(w.complexity for w in members) / len(members)
            assert abs(cluster.centroid_entropy - mean_h) < 1e-12
            assert abs(cluster.centroid_complexity - mean_c) < 1e-12

    def test_empty_input_rejected(self):
        with pytest.raises(InvalidInputError):
            cecp.group_periods([], 16)


class TestInefficiencyTrajectory:
    def test_ideal_point_scores_zero(self):
        q = cecp.Quantifiers(entropy=1.0, complexity=0.0, alphabet_size=24)
        assert q.inefficiency == 0.0

    def test_constant_slope_series_is_maximally_inefficient(self):
        series = cecp.RawSeries(values=np.arange(500.0), label="ramp")
        trajectory = cecp.inefficiency_trajectory(cecp.sliding_analysis(series))
        assert len(trajectory) == 11
        assert all(value == 1.0 for _, value in trajectory)

    def test_matches_per_window_quantifiers(self):
        results = cecp.sliding_analysis(noise_series(9, 800))
        trajectory = cecp.inefficiency_trajectory(results)
        assert trajectory == [(w.index, w.quantifiers.inefficiency) for w in results]

    def test_noise_stays_near_the_ideal_point(self):
        values = []
        for seed in range(20):
            series = noise_series(seed, 10_000)
            values.extend(v for _, v in cecp.inefficiency_trajectory(
                cecp.sliding_analysis(series)
            ))
        assert float(np.mean(values)) < 0.1

    def test_empty_input_rejected(self):
        with pytest.raises(InvalidInputError):
            cecp.inefficiency_trajectory([])


class TestAnalyzePanel:
    def test_results_keyed_and_sorted_by_label(self):
        panel = [noise_series(1, 400, "zzz"), noise_series(2, 400, "aaa")]
        out = cecp.analyze_panel(panel)
        assert list(out.keys()) == ["aaa", "zzz"]
        assert all(len(v) == 6 for v in out.values())

    def test_duplicate_labels_rejected(self):
        panel = [noise_series(1, 400, "x"), noise_series(2, 400, "x")]
        with pytest.raises(InvalidInputError):
            cecp.analyze_panel(panel)

    def test_short_member_raises_with_its_label(self):
        panel = [noise_series(1, 400, "ok"), noise_series(2, 100, "short")]
        with pytest.raises(InsufficientDataError) as err:
            cecp.analyze_panel(panel)
        assert "short" in str(err.value)
