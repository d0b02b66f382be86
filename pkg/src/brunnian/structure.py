"""Integral connectivity structures on a finite ground set.

A structure is a family of subsets containing the empty set and every
singleton, closed under unions of overlapping members.  Members are kept in
canonical order (cardinality, then bitmask) so that equality of structures is
plain tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GroundMismatch, NotClosed, NotGlobal
from .subsets import (
    Dissociation,
    canonical_key,
    card,
    check_ground,
    check_within,
    enumerate_dissociations,
    family_contests,
    format_subset,
    submasks,
)


def _trivial(n: int) -> set[int]:
    return {0} | {1 << i for i in range(n)}


@dataclass(frozen=True)
class ConnectivityStructure:
    """Canonical, validated integral connectivity structure.

    Build instances through :func:`validate_structure`, :func:`generate` or
    :func:`gamma`; the constructor does not re-check the closure axiom.
    """

    n: int
    members: tuple[int, ...]

    def __contains__(self, s: object) -> bool:
        return s in self._member_set

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def _member_set(self) -> frozenset[int]:
        cached = self.__dict__.get("_set")
        if cached is None:
            cached = frozenset(self.members)
            object.__setattr__(self, "_set", cached)
        return cached

    @property
    def nontrivial(self) -> tuple[int, ...]:
        """Members with at least two elements."""
        return tuple(s for s in self.members if card(s) >= 2)

    def issubset(self, other: ConnectivityStructure) -> bool:
        _same_ground(self, other)
        return self._member_set <= other._member_set

    def __str__(self) -> str:
        return "{" + ", ".join(format_subset(s) for s in self.members) + "}"


def _canonical(n: int, members: Iterable[int]) -> ConnectivityStructure:
    return ConnectivityStructure(n, tuple(sorted(set(members), key=canonical_key)))


def _same_ground(a: ConnectivityStructure, b: ConnectivityStructure) -> None:
    if a.n != b.n:
        raise GroundMismatch(f"ground sizes differ: {a.n} vs {b.n}")


def discrete(n: int) -> ConnectivityStructure:
    """Only the empty set and singletons are connected."""
    check_ground(n)
    return _canonical(n, _trivial(n))


def gross(n: int) -> ConnectivityStructure:
    """Every subset is connected."""
    check_ground(n)
    return _canonical(n, range(1 << n))


def validate_structure(n: int, sets: Iterable[int]) -> ConnectivityStructure:
    """Check the closure axiom on ``sets`` (plus the empty set and singletons).

    Raises :class:`NotClosed` for the first overlapping pair, in canonical
    order, whose union is absent.  Nothing is added beyond the trivial sets.
    """
    check_ground(n)
    members = _trivial(n)
    for s in sets:
        members.add(check_within(n, s))
    ordered = sorted(members, key=canonical_key)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a & b and (a | b) not in members:
                raise NotClosed(
                    a, b, f"{format_subset(a)} and {format_subset(b)} overlap but "
                    f"{format_subset(a | b)} is missing"
                )
    return ConnectivityStructure(n, tuple(ordered))


def generate(n: int, generators: Iterable[int]) -> ConnectivityStructure:
    """Smallest integral structure containing ``generators``.

    Saturates overlapping unions until a fixed point is reached.
    """
    check_ground(n)
    members = _trivial(n)
    for s in generators:
        members.add(check_within(n, s))
    frontier = [s for s in members if card(s) >= 2]
    big = list(frontier)
    while frontier:
        fresh = []
        for a in frontier:
            for b in big:
                u = a | b
                if a & b and u not in members:
                    members.add(u)
                    fresh.append(u)
        big.extend(fresh)
        frontier = fresh
    return _canonical(n, members)


def gamma(n: int, family: Iterable[int]) -> ConnectivityStructure:
    """All subsets whose every dissociation is contested by a member of ``family``.

    Evaluated by brute force over all ``2**n`` subsets; deliberately shares no
    code with :func:`generate`.
    """
    check_ground(n)
    fam = [check_within(n, s) for s in family]
    # a set with fewer than two elements cannot contest anything
    fam = [s for s in set(fam) if card(s) >= 2]
    kept = []
    for b in range(1 << n):
        if all(family_contests(fam, sigma) for sigma in enumerate_dissociations(b)):
            kept.append(b)
    return _canonical(n, kept)


def restrict(k: ConnectivityStructure, j: int) -> ConnectivityStructure:
    """Members of ``k`` included in ``j``, kept on the original ground set.

    The empty set and all singletons of the ground set stay members so the
    result is still integral.
    """
    check_within(k.n, j)
    return _canonical(k.n, _trivial(k.n) | {s for s in k.members if not s & ~j})


def intersection(k1: ConnectivityStructure, k2: ConnectivityStructure) -> ConnectivityStructure:
    _same_ground(k1, k2)
    return _canonical(k1.n, k1._member_set & k2._member_set)


def irreducibles(k: ConnectivityStructure) -> list[int]:
    """Members of size >= 2 not generated by the remaining members.

    Returned in canonical (cardinality, bitmask) order.
    """
    out = []
    members = k.members
    for s in members:
        if card(s) < 2:
            continue
        if s not in generate(k.n, [t for t in members if t != s]):
            out.append(s)
    return out


def structure_sum(k1: ConnectivityStructure, k2: ConnectivityStructure) -> ConnectivityStructure:
    """Join of two structures: the structure generated by their union."""
    _same_ground(k1, k2)
    return generate(k1.n, k1._member_set | k2._member_set)


def connected_components(k: ConnectivityStructure) -> list[int]:
    """Maximal members under inclusion; they partition the ground set."""
    maximal = [
        s for s in k.members
        if s and not any(t != s and s & ~t == 0 for t in k.members)
    ]
    return sorted(maximal, key=lambda s: s & -s)


def is_adapted(sigma: Dissociation, parts: Sequence[int]) -> bool:
    """True when every component lies inside one block of a global ``sigma``."""
    whole = 0
    for c in parts:
        whole |= c
    if sigma.domain != whole:
        raise NotGlobal(f"{sigma} is not a dissociation of the whole ground set")
    return all(c & ~sigma.block1 == 0 or c & ~sigma.block2 == 0 for c in parts)


def adapted_dissociations(parts: Sequence[int]) -> list[Dissociation]:
    """Global dissociations obtained by splitting the components into two groups."""
    if len(parts) < 2:
        return []
    first, rest = parts[0], list(parts[1:])
    out = []
    mask = (1 << len(rest)) - 1
    for pick in submasks(mask):
        if pick == mask:
            continue
        a = first
        b = 0
        for i, c in enumerate(rest):
            if pick >> i & 1:
                a |= c
            else:
                b |= c
        out.append(Dissociation(a, b))
    return sorted(out)

