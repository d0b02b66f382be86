"""Subsets of a finite ground set as bitmasks, and dissociations between them.

A subset of ``I = {1, ..., n}`` is a plain ``int``: bit ``i - 1`` is set when
``i`` belongs to the subset.  Keeping subsets as integers makes union,
intersection and inclusion single machine operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BrunnianError, NotOverlapping, OutOfRange

MAX_N = 16


def check_ground(n: int) -> int:
    """Validate a ground-set size and return it."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise OutOfRange(f"ground size must be an integer, got {n!r}")
    if not 1 <= n <= MAX_N:
        raise OutOfRange(f"ground size must satisfy 1 <= n <= {MAX_N}, got {n}")
    return n


def full(n: int) -> int:
    return (1 << n) - 1


def check_within(n: int, s: int) -> int:
    if s < 0 or s >> n:
        raise OutOfRange(f"subset {format_subset(s)} is not within I = {{1..{n}}}")
    return s


def subset(indices: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based indices."""
    bits = 0
    for i in indices:
        if i < 1:
            raise OutOfRange(f"index {i} is not a positive integer")
        bits |= 1 << (i - 1)
    return bits


def indices(s: int) -> list[int]:
    """1-based elements of ``s`` in increasing order."""
    out = []
    i = 1
    while s:
        if s & 1:
            out.append(i)
        s >>= 1
        i += 1
    return out


def positions(s: int) -> list[int]:
    """0-based bit positions of ``s`` in increasing order."""
    return [i - 1 for i in indices(s)]


def card(s: int) -> int:
    return bin(s).count("1")


def complement(n: int, s: int) -> int:
    return full(n) & ~s


def lowest(s: int) -> int:
    return s & -s


def submasks(s: int) -> Iterator[int]:
    """All submasks of ``s`` in increasing numeric order, including 0 and ``s``."""
    sub = 0
    while True:
        yield sub
        if sub == s:
            return
        sub = (sub - s) & s


def canonical_key(s: int) -> tuple[int, int]:
    """Sort key for members: cardinality first, then bitmask value."""
    return (card(s), s)


def format_subset(s: int) -> str:
    return "{" + ",".join(map(str, indices(s))) + "}"


@dataclass(frozen=True, order=True)
class Dissociation:
    """Unordered pair of disjoint nonempty subsets.

    ``block1`` always holds the smallest element of the domain, so two
    dissociations with swapped blocks compare equal.
    """

    block1: int
    block2: int

    def __post_init__(self) -> None:
        a, b = self.block1, self.block2
        if a <= 0 or b <= 0:
            raise BrunnianError("dissociation blocks must be nonempty")
        if a & b:
            raise BrunnianError("dissociation blocks must be disjoint")
        if lowest(b) < lowest(a):
            object.__setattr__(self, "block1", b)
            object.__setattr__(self, "block2", a)

    @property
    def domain(self) -> int:
        return self.block1 | self.block2

    def __str__(self) -> str:
        return f"({format_subset(self.block1)}|{format_subset(self.block2)})"


def enumerate_dissociations(j: int) -> list[Dissociation]:
    """Every dissociation of ``j``, ordered by the block holding min(j).

    There are ``2**(|j|-1) - 1`` of them when ``|j| >= 2`` and none otherwise.
    """
    if card(j) < 2:
        return []
    low = lowest(j)
    rest = j ^ low
    out = []
    for s in submasks(rest):
        if s == rest:
            continue
        out.append(Dissociation(low | s, rest ^ s))
    return out


def contests(a: int, sigma: Dissociation) -> bool:
    """True when ``a`` lies in the domain of ``sigma`` and meets both blocks."""
    return (a & ~sigma.domain) == 0 and bool(a & sigma.block1) and bool(a & sigma.block2)


def family_contests(family: Iterable[int], sigma: Dissociation) -> bool:
    """True when some member of ``family`` contests ``sigma``.

    The negation is "the family respects ``sigma``".
    """
    return any(contests(a, sigma) for a in family)


def restrict_dissociation(sigma: Dissociation, l: int) -> Dissociation:
    """The dissociation ``(l & block1, l & block2)`` induced on ``l``."""
    if not contests(l, sigma):
        raise NotOverlapping(
            f"{format_subset(l)} does not contest {sigma}; restriction would have an empty block"
        )
    return Dissociation(l & sigma.block1, l & sigma.block2)

