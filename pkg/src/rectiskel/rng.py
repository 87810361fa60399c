"""Deterministic 64-bit random stream (splitmix64).

The library needs a seedable generator whose output is bit-identical on
every platform and Python version.  splitmix64 is a tiny, well-known
mixer with published reference constants, so seeds written into result
files stay reproducible forever.  Contract: ``SplitMix64(seed)`` yields
the same sequence of 64-bit words everywhere.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """The splitmix64 finalizer on a 64-bit word."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """splitmix64 stream: state advances by the golden gamma each draw."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return mix64(self._state)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n) without modulo bias."""
        if n <= 0:
            raise ValueError("randrange bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def randint(self, a: int, b: int) -> int:
        """Uniform integer in [a, b] inclusive."""
        if b < a:
            raise ValueError("empty range")
        return a + self.randrange(b - a + 1)

    def float01(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def sample_distinct(self, k: int, a: int, b: int) -> list[int]:
        """k distinct integers from [a, b], sorted ascending."""
        span = b - a + 1
        if k > span:
            raise ValueError("not enough integers in range")
        if k == 0:
            return []
        # Partial Fisher-Yates on a sparse index map: O(k) draws even
        # when the range is huge, exact when k is close to the range.
        picked: dict[int, int] = {}
        out = []
        for i in range(k):
            j = self.randint(i, span - 1)
            vj = picked.get(j, j)
            vi = picked.get(i, i)
            picked[j] = vi
            out.append(a + vj)
        out.sort()
        return out


def derive_seed(seed: int, index: int) -> int:
    """Deterministic child seed for chunk/worker ``index``."""
    return mix64((seed ^ mix64(index + 1)) + _GAMMA)
