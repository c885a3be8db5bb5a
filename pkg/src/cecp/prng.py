"""Portable deterministic random number generation.

The generator is SplitMix64 (Steele, Lea & Flood 2014), frozen here with its
published constants so that seeded synthetic data is bit-identical across
platforms and Python versions. Uniform doubles take the top 53 bits of each
64-bit word; approximate standard normals are the Irwin-Hall sum of twelve
uniforms minus six, which uses only exact IEEE additions and therefore keeps
the cross-platform guarantee (no libm transcendentals involved).
"""

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """SplitMix64 stream seeded with a 64-bit integer."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_uint64() >> 11) * 2.0 ** -53

    def normal(self) -> float:
        """Approximate standard normal draw (Irwin-Hall, 12 uniforms)."""
        total = 0.0
        for _ in range(12):
            total += self.random()
        return total - 6.0
