"""Reproducible pseudo-random numbers from a 64-bit linear congruential generator.

``state <- state * 6364136223846793005 + 1442695040888963407 (mod 2**64)``;
each draw advances the state once and returns its high 32 bits.  The seed is
taken modulo ``2**64`` as the initial state.  ``below(k)`` reduces a draw
modulo ``k``, which is what every sampling helper here builds on.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

T = TypeVar("T")

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK64 = (1 << 64) - 1


class Lcg:
    def __init__(self, seed: int = 0) -> None:
        self.state = seed & MASK64

    def next_u32(self) -> int:
        self.state = (self.state * MULTIPLIER + INCREMENT) & MASK64
        return self.state >> 32

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("upper bound must be positive")
        return self.next_u32() % k

    def between(self, lo: int, hi: int) -> int:
        """Integer in the closed range ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq: Sequence[T]) -> T:
        return seq[self.below(len(seq))]

    def sample_indices(self, population: int, count: int) -> list[int]:
        """``count`` distinct indices below ``population``, in draw order.

        Partial Fisher-Yates over a lazily materialized permutation.
        """
        if count > population:
            raise ValueError("sample larger than population")
        swapped: dict[int, int] = {}
        out = []
        for i in range(count):
            j = i + self.below(population - i)
            out.append(swapped.get(j, j))
            swapped[j] = swapped.get(i, i)
        return out
