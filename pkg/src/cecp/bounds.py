"""Extremal complexity envelopes of the complexity-entropy plane.

For a fixed alphabet size M, the minimum-complexity curve is traced by the
one-parameter family with a single elevated state (all other states equally
sharing the remainder), and the maximum-complexity curve is the upper
envelope of M-1 families that pin n states to probability zero, one state to
p, and spread the rest uniformly. Both are evaluated in closed form on the
parameter grid, so the cost is O(resolution) regardless of M.

The families are a construction, not a theorem we take on faith: the test
suite checks by Monte-Carlo sampling that random distributions never leave
the band between the two curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .quantifiers import _nxlogx, max_jensen_shannon

DEFAULT_RESOLUTION = 1000


@dataclass(frozen=True, eq=False)
class BoundCurve:
    """Sampled (entropy, complexity) locus of one envelope, entropy ascending."""

    alphabet_size: int
    kind: str  # "lower" | "upper"
    entropies: np.ndarray
    complexities: np.ndarray

    def __post_init__(self):
        h = np.asarray(self.entropies, dtype=float)
        c = np.asarray(self.complexities, dtype=float)
        if h.shape != c.shape or h.ndim != 1 or h.size < 2:
            raise InvalidInputError("curve needs matching 1-d entropy/complexity arrays")
        if np.any(np.diff(h) < 0):
            raise InvalidInputError("curve entropies must be nondecreasing")
        h = h.copy()
        c = c.copy()
        h.flags.writeable = False
        c.flags.writeable = False
        object.__setattr__(self, "entropies", h)
        object.__setattr__(self, "complexities", c)

    @property
    def points(self) -> list[tuple[float, float]]:
        return [(float(h), float(c)) for h, c in zip(self.entropies, self.complexities)]

    def complexity_at(self, entropy):
        """Linear interpolation of the curve at the given entropy value(s)."""
        return np.interp(entropy, self.entropies, self.complexities)


def _validate(alphabet_size: int, resolution: int) -> None:
    if not isinstance(alphabet_size, (int, np.integer)) or alphabet_size < 2:
        raise InvalidInputError(f"alphabet size must be an integer >= 2, got {alphabet_size!r}")
    if not isinstance(resolution, (int, np.integer)) or resolution < 2:
        raise InvalidInputError(f"resolution must be an integer >= 2, got {resolution!r}")


def _plane_coordinates(
    s: np.ndarray, s_mid: np.ndarray, alphabet_size: int
) -> tuple[np.ndarray, np.ndarray]:
    """Map family entropies to clipped (H, C) coordinates."""
    log_m = math.log(alphabet_size)
    h = np.clip(s / log_m, 0.0, 1.0)
    js = s_mid - 0.5 * s - 0.5 * log_m
    c = np.clip(h * js / max_jensen_shannon(alphabet_size), 0.0, None)
    return h, c


def lower_bound(alphabet_size: int, resolution: int = DEFAULT_RESOLUTION) -> BoundCurve:
    """Minimum-complexity curve for an M-state alphabet.

    Sweeps p from 1/M (uniform, the (1, 0) corner) to 1 (degenerate, the
    (0, 0) corner) for the distribution (p, (1-p)/(M-1), ...).
    """
    _validate(alphabet_size, resolution)
    m = alphabet_size
    p = np.linspace(1.0 / m, 1.0, resolution)
    q = (1.0 - p) / (m - 1)
    s = _nxlogx(p) + (m - 1) * _nxlogx(q)
    s_mid = _nxlogx((p + 1.0 / m) / 2.0) + (m - 1) * _nxlogx((q + 1.0 / m) / 2.0)
    h, c = _plane_coordinates(s, s_mid, m)
    # p ascending walks entropy downward; flip so entropy ascends
    return BoundCurve(m, "lower", h[::-1], c[::-1])


def upper_bound(alphabet_size: int, resolution: int = DEFAULT_RESOLUTION) -> BoundCurve:
    """Maximum-complexity envelope for an M-state alphabet.

    Family n (n = M-2 .. 0) has n empty states, one state at p in
    [0, 1/(M-n)] and M-n-1 states sharing the remainder equally. Each family
    covers entropies [ln(M-n-1)/ln M, ln(M-n)/ln M], so consecutive families
    tile [0, 1] and meet at shared junction points; the envelope is their
    pointwise maximum, assembled by an entropy sort that keeps the larger
    complexity on ties.
    """
    _validate(alphabet_size, resolution)
    m = alphabet_size
    zero_mass_entropy = _nxlogx(np.array([1.0 / (2.0 * m)]))[0]
    all_h = []
    all_c = []
    for n in range(m - 2, -1, -1):
        nonzero = m - n
        rest = nonzero - 1
        p = np.linspace(0.0, 1.0 / nonzero, resolution)
        q = (1.0 - p) / rest
        s = _nxlogx(p) + rest * _nxlogx(q)
        s_mid = (
            _nxlogx((p + 1.0 / m) / 2.0)
            + rest * _nxlogx((q + 1.0 / m) / 2.0)
            + n * zero_mass_entropy
        )
        h, c = _plane_coordinates(s, s_mid, m)
        all_h.append(h)
        all_c.append(c)
    h = np.concatenate(all_h)
    c = np.concatenate(all_c)
    order = np.lexsort((-c, h))
    h, c = h[order], c[order]
    keep = np.ones(h.size, dtype=bool)
    keep[1:] = h[1:] > h[:-1]  # ties in entropy keep the first (largest) complexity
    return BoundCurve(m, "upper", h[keep], c[keep])
