"""Seeded synthetic signal generators.

Three reference dynamics: white noise (maximally random, the high-entropy
corner of the plane), a random walk (the idealized efficient-price
benchmark), and the logistic map (deterministic chaos, low entropy with
high complexity). All draws come from the SplitMix64 generator in
``cecp.prng``, so a spec generates bit-identical output on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .patterns import RawSeries
from .prng import SplitMix64

GENERATOR_KINDS = ("white_noise", "random_walk", "logistic_map")

DEFAULT_TRANSIENT = 1000

# Closed-orbit guard: keeps the logistic recurrence inside the open unit
# interval even when rounding lands exactly on 0, 0.5 (whose image at r=4 is
# 1, then 0 forever) or 1.
_ORBIT_FLOOR = 1e-12
_ORBIT_CEIL = 1.0 - 1e-12


@dataclass(frozen=True)
class GeneratorSpec:
    """Full recipe for one synthetic series; equal specs give equal output."""

    kind: str
    length: int
    seed: int = 0
    r: float = 4.0
    x0: float | None = None  # None draws a seed-derived start point
    transient: int = DEFAULT_TRANSIENT
    label: str | None = None

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise InvalidInputError(
                f"unknown generator kind {self.kind!r}; expected one of {GENERATOR_KINDS}"
            )
        if not isinstance(self.length, (int, np.integer)) or self.length < 1:
            raise InvalidInputError(f"length must be an integer >= 1, got {self.length!r}")
        if not isinstance(self.seed, (int, np.integer)):
            raise InvalidInputError(f"seed must be an integer, got {self.seed!r}")
        if self.kind == "logistic_map":
            if not 0.0 < self.r <= 4.0:
                raise InvalidInputError(f"logistic r must lie in (0, 4], got {self.r!r}")
            if self.x0 is not None and not 0.0 < self.x0 < 1.0:
                raise InvalidInputError(f"logistic x0 must lie in (0, 1), got {self.x0!r}")
            if not isinstance(self.transient, (int, np.integer)) or self.transient < 0:
                raise InvalidInputError(
                    f"transient must be an integer >= 0, got {self.transient!r}"
                )

    @property
    def effective_label(self) -> str:
        return self.label if self.label else f"{self.kind}-{self.seed}"


def _white_noise(spec: GeneratorSpec) -> np.ndarray:
    rng = SplitMix64(spec.seed)
    return np.array([rng.random() for _ in range(spec.length)])


def _random_walk(spec: GeneratorSpec) -> np.ndarray:
    rng = SplitMix64(spec.seed)
    increments = np.array([rng.normal() for _ in range(spec.length)])
    return np.cumsum(increments)


def _logistic_map(spec: GeneratorSpec) -> np.ndarray:
    if spec.x0 is not None:
        x = spec.x0
    else:
        # map a seed-derived uniform into the open interval
        u = SplitMix64(spec.seed).random()
        x = _ORBIT_FLOOR + u * (_ORBIT_CEIL - _ORBIT_FLOOR)
    r = spec.r
    for _ in range(spec.transient):
        x = min(max(r * x * (1.0 - x), _ORBIT_FLOOR), _ORBIT_CEIL)
    out = np.empty(spec.length)
    out[0] = x
    for t in range(1, spec.length):
        x = min(max(r * x * (1.0 - x), _ORBIT_FLOOR), _ORBIT_CEIL)
        out[t] = x
    return out


_DISPATCH = {
    "white_noise": _white_noise,
    "random_walk": _random_walk,
    "logistic_map": _logistic_map,
}


def generate(spec: GeneratorSpec) -> RawSeries:
    """Deterministically synthesize the series described by the spec."""
    values = _DISPATCH[spec.kind](spec)
    return RawSeries(values=values, label=spec.effective_label)
