"""Sliding-window analysis: per-window quantifiers, period clusters, trajectories.

A series of length N is cut into overlapping windows of ``window_length``
values advancing by ``step``; each window is symbolized and quantified
independently, so windows are embarrassingly parallel and the result is
identical whether computed serially or concurrently. Consecutive windows are
then grouped into fixed-size periods summarized by their centroid in the
complexity-entropy plane.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .errors import InsufficientDataError, InvalidInputError
from .patterns import RawSeries, _check_dimension, pattern_distribution
from .quantifiers import Quantifiers


@dataclass(frozen=True)
class AnalysisConfig:
    """Knobs of the sliding-window pipeline.

    Defaults target daily data: four-value patterns over 300-observation
    windows advancing 20 observations at a time, grouped 16 windows per
    period.
    """

    dimension: int = 4
    delay: int = 1
    window_length: int = 300
    step: int = 20
    period_size: int = 16
    max_windows: int | None = None

    def __post_init__(self):
        _check_dimension(self.dimension)
        if not isinstance(self.delay, (int, np.integer)) or self.delay < 1:
            raise InvalidInputError(f"delay must be an integer >= 1, got {self.delay!r}")
        shortest = (self.dimension - 1) * self.delay + 1
        if not isinstance(self.window_length, (int, np.integer)) or self.window_length < shortest:
            raise InvalidInputError(
                f"window_length must be an integer >= {shortest} "
                f"(one full pattern), got {self.window_length!r}"
            )
        if not isinstance(self.step, (int, np.integer)) or self.step < 1:
            raise InvalidInputError(f"step must be an integer >= 1, got {self.step!r}")
        if not isinstance(self.period_size, (int, np.integer)) or self.period_size < 1:
            raise InvalidInputError(
                f"period_size must be an integer >= 1, got {self.period_size!r}"
            )
        if self.max_windows is not None and (
            not isinstance(self.max_windows, (int, np.integer)) or self.max_windows < 1
        ):
            raise InvalidInputError(
                f"max_windows must be an integer >= 1 or None, got {self.max_windows!r}"
            )


@dataclass(frozen=True)
class WindowResult:
    """Quantifiers of one window plus its position in the series."""

    index: int
    start_offset: int
    end_offset: int  # exclusive
    quantifiers: Quantifiers
    start_timestamp: object | None = None  # timestamp of the first observation
    end_timestamp: object | None = None  # timestamp of the last observation

    @property
    def entropy(self) -> float:
        return self.quantifiers.entropy

    @property
    def complexity(self) -> float:
        return self.quantifiers.complexity

    @property
    def inefficiency(self) -> float:
        return self.quantifiers.inefficiency


@dataclass(frozen=True)
class PeriodCluster:
    """A contiguous block of windows summarized by its plane centroid."""

    period_id: int  # 1-based
    window_indices: tuple[int, ...]
    centroid_entropy: float
    centroid_complexity: float

    @property
    def size(self) -> int:
        return len(self.window_indices)


def window_count(series_length: int, window_length: int, step: int) -> int:
    """Number of full windows: floor((N - W) / step) + 1, or 0 when N < W."""
    if series_length < window_length:
        return 0
    return (series_length - window_length) // step + 1


def sliding_analysis(
    series: RawSeries,
    cfg: AnalysisConfig = AnalysisConfig(),
    workers: int | None = None,
) -> list[WindowResult]:
    """Quantify every sliding window of the series, in window order.

    ``workers`` sets the number of threads; None or 1 runs serially. The
    output is independent of the worker count because each window is a pure
    function of its raw slice.
    """
    if workers is not None and (not isinstance(workers, (int, np.integer)) or workers < 1):
        raise InvalidInputError(f"workers must be an integer >= 1 or None, got {workers!r}")
    n = len(series)
    if n < cfg.window_length:
        raise InsufficientDataError(
            f"series {series.label!r} has {n} values, fewer than the "
            f"window length {cfg.window_length}"
        )
    count = window_count(n, cfg.window_length, cfg.step)
    if cfg.max_windows is not None:
        count = min(count, cfg.max_windows)

    def one_window(index: int) -> WindowResult:
        start = index * cfg.step
        stop = start + cfg.window_length
        dist = pattern_distribution(series.values[start:stop], cfg.dimension, cfg.delay)
        start_ts = end_ts = None
        if series.timestamps is not None:
            start_ts = series.timestamps[start]
            end_ts = series.timestamps[stop - 1]
        return WindowResult(
            index=index,
            start_offset=start,
            end_offset=stop,
            quantifiers=Quantifiers.from_distribution(dist),
            start_timestamp=start_ts,
            end_timestamp=end_ts,
        )

    if workers is None or workers == 1 or count <= 1:
        return [one_window(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=int(workers)) as pool:
        return list(pool.map(one_window, range(count)))


def group_periods(results: list[WindowResult], period_size: int) -> list[PeriodCluster]:
    """Partition windows into consecutive blocks of ``period_size``.

    A trailing remainder shorter than a full period is absorbed into the
    last block, so the final period may hold up to 2*period_size - 1
    windows. Centroids are plain arithmetic means of (entropy, complexity).
    """
    if not results:
        raise InvalidInputError("cannot group an empty window list into periods")
    if not isinstance(period_size, (int, np.integer)) or period_size < 1:
        raise InvalidInputError(f"period_size must be an integer >= 1, got {period_size!r}")
    n = len(results)
    n_periods = max(n // period_size, 1)
    clusters = []
    for k in range(n_periods):
        start = k * period_size
        stop = (k + 1) * period_size if k < n_periods - 1 else n
        members = results[start:stop]
        clusters.append(
            PeriodCluster(
                period_id=k + 1,
                window_indices=tuple(w.index for w in members),
                centroid_entropy=float(np.mean([w.entropy for w in members])),
                centroid_complexity=float(np.mean([w.complexity for w in members])),
            )
        )
    return clusters


def inefficiency_trajectory(results: list[WindowResult]) -> list[tuple[int, float]]:
    """Per-window distance to the ideal point (1, 0), in window order."""
    if not results:
        raise InvalidInputError("cannot build a trajectory from an empty window list")
    return [(w.index, w.inefficiency) for w in results]


def analyze_panel(
    panel: list[RawSeries],
    cfg: AnalysisConfig = AnalysisConfig(),
    workers: int | None = None,
) -> dict[str, list[WindowResult]]:
    """Sliding analysis of several series, keyed and ordered by label."""
    labels = [s.label for s in panel]
    if len(set(labels)) != len(labels):
        raise InvalidInputError("panel series labels must be unique")
    out: dict[str, list[WindowResult]] = {}
    for series in sorted(panel, key=lambda s: s.label):
        out[series.label] = sliding_analysis(series, cfg, workers=workers)
    return out


def with_max_windows(cfg: AnalysisConfig, max_windows: int | None) -> AnalysisConfig:
    """Copy of the config with a different window cap."""
    return replace(cfg, max_windows=max_windows)
