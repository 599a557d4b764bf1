"""Pinned 64-bit random source shared by the pure-Python and compiled kernels.

The generator is SplitMix64 (Steele, Lea & Flood).  Bounded draws use
rejection sampling so every value in ``[0, r)`` is exactly equally likely.
Both kernel backends reproduce this stream bit for bit.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

ORDER_STREAM = 0
COLOUR_STREAM = 1


def mix64(z: int) -> int:
    """SplitMix64 output finalizer."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(master_seed: int, repetition: int, stream: int) -> int:
    """Seed for one stream of one repetition.

    ``mix64(master + (2*repetition + stream + 1) * GOLDEN_GAMMA)``; depends
    only on its arguments, so serial and parallel runs agree.
    """
    return mix64((master_seed & MASK64) + (2 * repetition + stream + 1) * GOLDEN_GAMMA)


class SplitMix64:
    """Deterministic 64-bit generator; identical seeds give identical streams."""

    __slots__ = ("state",)

    def __init__(self, seed: int = 0) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def uniform_below(self, r: int) -> int:
        if r <= 0:
            raise ValueError(f"uniform_below needs r >= 1, got {r}")
        if r == 1:
            return 0
        limit = (1 << 64) - ((1 << 64) % r)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % r

    def __repr__(self) -> str:
        return f"SplitMix64(state={self.state:#018x})"


def shuffle(items: list, rand: SplitMix64) -> list:
    """Fisher-Yates shuffle in place, highest index first."""
    for i in range(len(items) - 1, 0, -1):
        j = rand.uniform_below(i + 1)
        items[i], items[j] = items[j], items[i]
    return items
