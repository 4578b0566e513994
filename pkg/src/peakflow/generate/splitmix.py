"""
Module: splitmix

This module implements SplitMix64, the portable pseudo-random generator every
scenario is drawn from. The recurrence is fixed so that a seed reproduces the
same scenario in any language:

    state = state + 0x9E3779B97F4A7C15
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    out = z ^ (z >> 31)

All arithmetic is modulo 2**64.
"""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX_1 = 0xBF58476D1CE4E5B9
_MIX_2 = 0x94D049BB133111EB


class SplitMix64():
    """
    SplitMix64

    Single-owner generator with explicit 64-bit state.

    Usage Example:
        >>> rng = SplitMix64(7)
        >>> rng.next_u64()
        >>> rng.random()
    """

    def __init__(self, seed):
        if isinstance(seed, bool) or not isinstance(seed, int):
            raise TypeError("seed must be an integer")
        if not 0 <= seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self.state = seed

    def next_u64(self):
        """
        Public method: next_u64()
        Advances the state and returns the next 64-bit output.
        """
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX_1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX_2) & MASK64
        return z ^ (z >> 31)

    def random(self):
        """float: Uniform in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo, hi):
        """float: Uniform in [lo, hi)."""
        return lo + (hi - lo) * self.random()

    def randbelow(self, n):
        """
        Public method: randbelow()
        Returns an unbiased integer in ``[0, n)``. Outputs falling in the
        incomplete last block of size ``2**64 mod n`` are rejected.
        """
        if n < 1:
            raise ValueError("n must be positive")
        limit = ((MASK64 + 1) // n) * n
        while True:
            out = self.next_u64()
            if out < limit:
                return out % n

    def randint(self, lo, hi):
        """int: Uniform in ``[lo, hi]`` inclusive."""
        if hi < lo:
            raise ValueError("empty integer range")
        return lo + self.randbelow(hi - lo + 1)

    def sample(self, n, k):
        """
        Public method: sample()
        Draws ``k`` distinct integers from ``range(n)`` by a partial Fisher-Yates
        shuffle, in draw order.
        """
        if not 0 <= k <= n:
            raise ValueError(f"cannot draw {k} distinct items from {n}")
        pool = list(range(n))
        for i in range(k):
            j = i + self.randbelow(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


def derive_seed(base, point, trial):
    """
    Seed of one sweep scenario: a single SplitMix64 output of the base seed
    mixed with the point and trial indices.

    Arguments:
        base (int): Base seed of the sweep.
        point (int): Index of the sweep point.
        trial (int): Index of the trial at that point.

    Returns:
        int: A 64-bit seed.
    """
    mixed = (int(base) ^ ((int(point) & 0xFFFFFFFF) << 32) ^ (int(trial) & 0xFFFFFFFF)) & MASK64
    return SplitMix64(mixed).next_u64()
