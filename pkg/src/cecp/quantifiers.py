"""Information quantifiers over discrete probability distributions.

Everything works in natural log internally; the normalized quantities are
base invariant because numerator and denominator share the log base. The
0 * log(0) = 0 convention is enforced explicitly rather than left to
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidAlphabetError, InvalidDistributionError
from .patterns import PatternDistribution

NORMALIZATION_TOLERANCE = 1e-9

ProbabilityVector = Sequence[float] | np.ndarray


def _as_distribution(p: ProbabilityVector) -> np.ndarray:
    """Validate a probability vector and renormalize it exactly."""
    arr = np.asarray(p, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise InvalidDistributionError("distribution must be a nonempty 1-d vector")
    if not np.all(np.isfinite(arr)):
        raise InvalidDistributionError("distribution contains non-finite entries")
    if np.any(arr < 0):
        raise InvalidDistributionError("distribution contains negative entries")
    total = float(arr.sum())
    if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
        raise InvalidDistributionError(f"distribution sums to {total!r}, not 1")
    return arr / total


def _probabilities(p: ProbabilityVector | PatternDistribution) -> np.ndarray:
    if isinstance(p, PatternDistribution):
        return _as_distribution(p.probabilities)
    return _as_distribution(p)


def _nxlogx(arr: np.ndarray) -> np.ndarray:
    """Elementwise -x*ln(x) with the 0*ln(0)=0 convention."""
    out = np.zeros_like(arr)
    positive = arr > 0
    out[positive] = -arr[positive] * np.log(arr[positive])
    return out


def shannon_entropy(p: ProbabilityVector | PatternDistribution) -> float:
    """Shannon entropy -sum(p_i ln p_i) in nats, in [0, ln M]."""
    return float(_nxlogx(_probabilities(p)).sum())


def normalized_entropy(p: ProbabilityVector | PatternDistribution) -> float:
    """Shannon entropy divided by its maximum ln(M); dimensionless in [0, 1]."""
    arr = _probabilities(p)
    if arr.size < 2:
        raise InvalidAlphabetError(f"alphabet must have at least 2 states, got {arr.size}")
    return float(_nxlogx(arr).sum() / math.log(arr.size))


def jensen_shannon_divergence(
    p: ProbabilityVector | PatternDistribution,
    q: ProbabilityVector | PatternDistribution,
) -> float:
    """Jensen-Shannon divergence S[(P+Q)/2] - S[P]/2 - S[Q]/2 (nats).

    Symmetric, nonnegative, and zero exactly when the two distributions
    coincide.
    """
    p_arr = _probabilities(p)
    q_arr = _probabilities(q)
    if p_arr.size != q_arr.size:
        raise InvalidDistributionError(
            f"length mismatch: {p_arr.size} vs {q_arr.size} states"
        )
    mid = 0.5 * (p_arr + q_arr)
    js = _nxlogx(mid).sum() - 0.5 * _nxlogx(p_arr).sum() - 0.5 * _nxlogx(q_arr).sum()
    return max(float(js), 0.0)


def max_jensen_shannon(alphabet_size: int) -> float:
    """Largest possible divergence from the uniform distribution over M states.

    Attained by any degenerate (single-state) distribution:
        -(1/2) [ ((M+1)/M) ln(M+1) - 2 ln(2M) + ln M ]
    The reciprocal is the disequilibrium normalization constant.
    """
    if alphabet_size < 2:
        raise InvalidAlphabetError(
            f"alphabet must have at least 2 states, got {alphabet_size}"
        )
    m = float(alphabet_size)
    return -0.5 * ((m + 1.0) / m * math.log(m + 1.0) - 2.0 * math.log(2.0 * m) + math.log(m))


def disequilibrium(p: ProbabilityVector | PatternDistribution) -> float:
    """Normalized Jensen-Shannon distance to the uniform distribution, in [0, 1]."""
    arr = _probabilities(p)
    if arr.size < 2:
        raise InvalidAlphabetError(f"alphabet must have at least 2 states, got {arr.size}")
    uniform = np.full(arr.size, 1.0 / arr.size)
    return jensen_shannon_divergence(arr, uniform) / max_jensen_shannon(arr.size)


def statistical_complexity(p: ProbabilityVector | PatternDistribution) -> float:
    """Product of disequilibrium and normalized entropy.

    Vanishes for both the uniform distribution (no disequilibrium) and any
    degenerate distribution (no entropy); strictly positive in between.
    """
    arr = _probabilities(p)
    h = normalized_entropy(arr)
    if h == 0.0:
        return 0.0
    return disequilibrium(arr) * h


def inefficiency(entropy: float, complexity: float) -> float:
    """Euclidean distance from (entropy, complexity) to the ideal point (1, 0).

    Zero exactly at maximal entropy with zero complexity, the signature of a
    memoryless process; grows as a series becomes more structured.
    """
    return math.sqrt((entropy - 1.0) ** 2 + complexity ** 2)


@dataclass(frozen=True)
class Quantifiers:
    """The (entropy, complexity) pair of one distribution plus derived values."""

    entropy: float
    complexity: float
    alphabet_size: int

    @property
    def inefficiency(self) -> float:
        return inefficiency(self.entropy, self.complexity)

    @classmethod
    def from_distribution(cls, p: ProbabilityVector | PatternDistribution) -> "Quantifiers":
        arr = _probabilities(p)
        return cls(
            entropy=normalized_entropy(arr),
            complexity=statistical_complexity(arr),
            alphabet_size=int(arr.size),
        )
