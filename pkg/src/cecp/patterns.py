"""Ordinal symbolization of time series.

A window of D values (spaced ``delay`` apart) is reduced to the permutation
describing its rank order: ``ranks[i]`` is the ascending rank of the i-th
value, so a strictly increasing window maps to (0, 1, ..., D-1). Equal values
rank in order of appearance, i.e. the earlier observation counts as the
smaller one, which keeps the symbolization deterministic on series with
repeated values (flat stretches in quoted rates, for example).

Each permutation also has a canonical integer index in [0, D!-1] via its
Lehmer (factorial-number) code, which is what makes array-backed counting of
pattern frequencies O(1) per window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import datetime
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    InsufficientDataError,
    InvalidInputError,
    UnsupportedDimensionError,
)
from .prng import SplitMix64

MAX_DIMENSION = 10  # 10! counts fit comfortably in memory; 11! does not need to


def _check_dimension(dimension: int) -> None:
    if not isinstance(dimension, (int, np.integer)) or dimension < 2:
        raise InvalidInputError(f"dimension must be an integer >= 2, got {dimension!r}")
    if dimension > MAX_DIMENSION:
        raise UnsupportedDimensionError(
            f"dimension {dimension} exceeds the supported maximum of {MAX_DIMENSION}"
        )


@dataclass(frozen=True)
class OrdinalPattern:
    """Rank-order permutation of one embedding window.

    ``ranks[i]`` is the ascending rank (0 = smallest) of the window's i-th
    value in time order; ties rank earlier observations lower.
    """

    ranks: tuple[int, ...]

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.ranks)
        object.__setattr__(self, "ranks", ranks)
        d = len(ranks)
        _check_dimension(d)
        if sorted(ranks) != list(range(d)):
            raise InvalidInputError(f"ranks {ranks} is not a permutation of 0..{d - 1}")

    @property
    def dimension(self) -> int:
        return len(self.ranks)

    @property
    def index(self) -> int:
        """Canonical Lehmer-code index in [0, D!-1].

        The identity permutation maps to 0 and the full reversal to D!-1.
        """
        d = len(self.ranks)
        code = 0
        for i in range(d - 1):
            smaller_after = sum(1 for j in range(i + 1, d) if self.ranks[j] < self.ranks[i])
            code += smaller_after * math.factorial(d - 1 - i)
        return code

    @classmethod
    def from_index(cls, index: int, dimension: int) -> "OrdinalPattern":
        """Decode a canonical index back into its rank permutation."""
        _check_dimension(dimension)
        m = math.factorial(dimension)
        if not 0 <= index < m:
            raise InvalidInputError(f"index {index} outside [0, {m - 1}] for dimension {dimension}")
        available = list(range(dimension))
        ranks = []
        remainder = index
        for i in range(dimension):
            radix = math.factorial(dimension - 1 - i)
            digit, remainder = divmod(remainder, radix)
            ranks.append(available.pop(digit))
        return cls(tuple(ranks))

    @classmethod
    def from_window(cls, window: Sequence[float]) -> "OrdinalPattern":
        return extract_pattern(window)


def extract_pattern(window: Sequence[float], dimension: int | None = None) -> OrdinalPattern:
    """Ordinal pattern of a single window of values.

    ``dimension``, when given, asserts the expected window length. Equal
    values are ranked by order of appearance (earlier = smaller).
    """
    arr = np.asarray(window, dtype=float)
    if arr.ndim != 1:
        raise InvalidInputError("window must be one-dimensional")
    if dimension is not None and arr.size != dimension:
        raise DimensionMismatchError(
            f"window has {arr.size} values, expected dimension {dimension}"
        )
    _check_dimension(arr.size)
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError("window contains non-finite values")
    order = np.argsort(arr, kind="stable")
    ranks = np.empty(arr.size, dtype=np.intp)
    ranks[order] = np.arange(arr.size)
    return OrdinalPattern(tuple(int(r) for r in ranks))


@dataclass(frozen=True, eq=False)
class RawSeries:
    """An ordered sequence of finite observations with an optional time axis."""

    values: np.ndarray
    timestamps: tuple[datetime, ...] | None = None
    label: str = ""

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise InvalidInputError("series must hold at least one value")
        if not np.all(np.isfinite(arr)):
            raise InvalidInputError(f"series {self.label!r} contains non-finite values")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)
        if self.timestamps is not None:
            stamps = tuple(self.timestamps)
            if len(stamps) != arr.size:
                raise InvalidInputError(
                    f"series {self.label!r}: {len(stamps)} timestamps for {arr.size} values"
                )
            for a, b in zip(stamps, stamps[1:]):
                if not a < b:
                    raise InvalidInputError(
                        f"series {self.label!r}: timestamps must be strictly increasing"
                    )
            object.__setattr__(self, "timestamps", stamps)

    def __len__(self) -> int:
        return int(self.values.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RawSeries):
            return NotImplemented
        return (
            self.label == other.label
            and self.timestamps == other.timestamps
            and np.array_equal(self.values, other.values)
        )


@dataclass(frozen=True, eq=False)
class PatternDistribution:
    """Frequencies of all D! ordinal patterns extracted from one series.

    ``counts[k]`` is the number of windows whose pattern has canonical index
    k; ``sample_count`` is the number of extracted windows, N - (D-1)*delay.
    """

    dimension: int
    delay: int
    counts: np.ndarray
    sample_count: int

    def __post_init__(self):
        _check_dimension(self.dimension)
        if self.delay < 1:
            raise InvalidInputError(f"delay must be >= 1, got {self.delay}")
        counts = np.asarray(self.counts, dtype=np.int64)
        m = math.factorial(self.dimension)
        if counts.shape != (m,):
            raise InvalidInputError(f"counts must have length {m}, got {counts.shape}")
        if np.any(counts < 0):
            raise InvalidInputError("counts must be nonnegative")
        if int(counts.sum()) != self.sample_count:
            raise InvalidInputError("sample_count must equal the sum of counts")
        counts = counts.copy()
        counts.flags.writeable = False
        object.__setattr__(self, "counts", counts)

    @property
    def alphabet_size(self) -> int:
        return int(self.counts.size)

    @property
    def probabilities(self) -> np.ndarray:
        if self.sample_count == 0:
            return np.zeros(self.counts.size)
        return self.counts / self.sample_count

    @property
    def series_length(self) -> int:
        """Length of the series the distribution was extracted from."""
        return self.sample_count + (self.dimension - 1) * self.delay

    @property
    def undersampled(self) -> bool:
        """True when the series is shorter than five alphabets' worth of data,
        too short for the pattern frequencies to be trustworthy."""
        return self.series_length < 5 * self.alphabet_size

    def __eq__(self, other) -> bool:
        if not isinstance(other, PatternDistribution):
            return NotImplemented
        return (
            self.dimension == other.dimension
            and self.delay == other.delay
            and self.sample_count == other.sample_count
            and np.array_equal(self.counts, other.counts)
        )


def pattern_codes(values: np.ndarray, dimension: int, delay: int = 1) -> np.ndarray:
    """Canonical pattern index of every overlapping window, vectorized.

    For window start t, the code accumulates for each position i the number
    of later positions holding a strictly smaller value, weighted by
    (D-1-i)!. Strict comparison is what implements the earlier-is-smaller
    tie rule: a tied later value simply does not count as smaller.
    """
    n_windows = values.size - (dimension - 1) * delay
    codes = np.zeros(n_windows, dtype=np.int64)
    for i in range(dimension - 1):
        col_i = values[i * delay: i * delay + n_windows]
        smaller_after = np.zeros(n_windows, dtype=np.int64)
        for j in range(i + 1, dimension):
            col_j = values[j * delay: j * delay + n_windows]
            smaller_after += col_j < col_i
        codes += smaller_after * math.factorial(dimension - 1 - i)
    return codes


def pattern_distribution(
    series: RawSeries | Sequence[float] | np.ndarray,
    dimension: int,
    delay: int = 1,
) -> PatternDistribution:
    """Ordinal pattern probability distribution of a series.

    Classifies all N - (D-1)*delay overlapping windows. Raises
    InsufficientDataError when the series cannot host a single window.
    """
    if isinstance(series, RawSeries):
        values = series.values
    else:
        values = np.asarray(series, dtype=float)
        if values.ndim != 1:
            raise InvalidInputError("series must be one-dimensional")
        if not np.all(np.isfinite(values)):
            raise InvalidInputError("series contains non-finite values")
    _check_dimension(dimension)
    if not isinstance(delay, (int, np.integer)) or delay < 1:
        raise InvalidInputError(f"delay must be an integer >= 1, got {delay!r}")
    needed = (dimension - 1) * delay + 1
    if values.size < needed:
        raise InsufficientDataError(
            f"series of length {values.size} is shorter than the {needed} values "
            f"needed for dimension {dimension} and delay {delay}"
        )
    codes = pattern_codes(values, dimension, delay)
    counts = np.bincount(codes, minlength=math.factorial(dimension))
    return PatternDistribution(
        dimension=dimension,
        delay=delay,
        counts=counts,
        sample_count=int(codes.size),
    )


def with_jitter(series: RawSeries, amplitude: float, seed: int = 0) -> RawSeries:
    """Copy of the series with seeded uniform noise added to every value.

    Tie-breaking preprocessing for series with long runs of repeated values:
    each value gets ``amplitude * (u - 0.5)`` with u drawn from SplitMix64,
    so the result is deterministic per seed. Amplitude 0 returns the series
    unchanged.
    """
    if amplitude < 0:
        raise InvalidInputError(f"jitter amplitude must be >= 0, got {amplitude}")
    if amplitude == 0:
        return series
    rng = SplitMix64(seed)
    noise = np.array([rng.random() - 0.5 for _ in range(len(series))])
    return RawSeries(
        values=series.values + amplitude * noise,
        timestamps=series.timestamps,
        label=series.label,
    )
