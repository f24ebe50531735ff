"""Small deterministic PRNG used by the random graph generators.

Python's ``random`` module does not promise identical streams across
versions for every method, and numpy's ``Generator`` distributions carry a
similar caveat.  The graph generators need bit-for-bit reproducible edge
sets for a fixed seed, across platforms and library versions, so they run
on this self-contained SplitMix64 implementation (Steele, Lea & Flood's
mixing constants).
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 streaming generator over 64-bit state."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0 ** -53

    def randrange(self, n: int) -> int:
        """Unbiased integer in [0, n) via rejection sampling."""
        if n <= 0:
            raise ValueError("randrange bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def choice(self, seq):
        if not seq:
            raise ValueError("cannot choose from an empty sequence")
        return seq[self.randrange(len(seq))]

    def sample_distinct(self, seq, k: int) -> list:
        """k distinct elements of seq, by repeated draws with rejection.

        seq may contain repeats (urn sampling); distinctness is on values.
        """
        if k < 0:
            raise ValueError("sample size must be non-negative")
        chosen: list = []
        seen = set()
        if len(set(seq)) < k:
            raise ValueError("not enough distinct elements to sample")
        while len(chosen) < k:
            x = self.choice(seq)
            if x not in seen:
                seen.add(x)
                chosen.append(x)
        return chosen
