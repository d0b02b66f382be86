"""Bounded search for realizations on fewer outcomes than the canonical one.

Candidates are uniform families on ``m`` outcomes, ``m = 1, 2, ...``.  Since
the probability is uniform a candidate is a multiset of ``m`` value rows, so
outcome permutations are quotiented out by only generating rows in
nondecreasing lexicographic order.  Per-variable value permutations are cut
down by requiring every column to introduce its codes in increasing order
(0 first, then 1, ...).  The lexicographically least member of each symmetry
class always passes both filters, so no class is skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .constructions import realize, universe_size
from .errors import BrunnianError
from .family import RandomFamily, connectivity_structure, validate_family
from .structure import ConnectivityStructure
from .subsets import card, enumerate_dissociations, positions

MODELS = ("uniform-any-m", "uniform-dyadic")


@dataclass(frozen=True)
class SearchBudget:
    """Caps for :func:`minimize_family`.

    ``uniform-dyadic`` only tries outcome counts that are powers of two.
    """

    max_universe: int = 8
    max_alphabet: int = 3
    max_candidates: int = 200_000
    probability_model: str = "uniform-any-m"

    def __post_init__(self) -> None:
        for name in ("max_universe", "max_alphabet", "max_candidates"):
            if getattr(self, name) < 1:
                raise BrunnianError(f"{name} must be positive")
        if self.max_universe > 12:
            raise BrunnianError("max_universe must be at most 12")
        if self.probability_model not in MODELS:
            raise BrunnianError(f"unknown probability model {self.probability_model!r}")

    def sizes(self, limit: int) -> list[int]:
        top = min(self.max_universe, limit)
        if self.probability_model == "uniform-dyadic":
            return [m for m in range(1, top + 1) if m & (m - 1) == 0]
        return list(range(1, top + 1))


@dataclass
class SearchResult:
    family: RandomFamily
    examined: int
    found: bool
    canonical_size: int


def _rows_after(prev: tuple, seen: list[int], n: int, alphabet: int) -> Iterator[tuple]:
    """Rows >= ``prev`` whose new codes extend each column's codes by one at most."""
    row = [0] * n

    def walk(c: int, tight: bool) -> Iterator[tuple]:
        if c == n:
            yield tuple(row)
            return
        lo = prev[c] if tight else 0
        hi = min(seen[c] + 1, alphabet - 1)
        for v in range(lo, hi + 1):
            row[c] = v
            yield from walk(c + 1, tight and v == lo)

    yield from walk(0, True)


def _candidates(n: int, m: int, alphabet: int) -> Iterator[list[tuple]]:
    rows: list[tuple] = []

    def walk(seen: list[int]) -> Iterator[list[tuple]]:
        if len(rows) == m:
            yield rows
            return
        prev = rows[-1] if rows else (0,) * n
        for row in _rows_after(prev, seen, n, alphabet):
            rows.append(row)
            yield from walk([max(s, v) for s, v in zip(seen, row)])
            rows.pop()

    yield from walk([-1] * n)


def _counts(rows: list[tuple], pos: list[int]) -> dict[tuple, int]:
    out: dict[tuple, int] = {}
    for r in rows:
        key = tuple(r[i] for i in pos)
        out[key] = out.get(key, 0) + 1
    return out


def _has_structure(rows: list[tuple], target: ConnectivityStructure) -> bool:
    """Uniform-weight structure test that stops at the first disagreement."""
    n, m = target.n, len(rows)
    cache: dict[int, dict[tuple, int]] = {}

    def counts(j: int) -> dict[tuple, int]:
        if j not in cache:
            cache[j] = _counts(rows, positions(j))
        return cache[j]

    def factorizes(j1: int, j2: int) -> bool:
        c1, c2 = counts(j1), counts(j2)
        cj = counts(j1 | j2)
        if len(cj) != len(c1) * len(c2):
            return False
        p1, p2 = positions(j1), positions(j2)
        order = sorted(p1 + p2)
        for key, c in cj.items():
            val = dict(zip(order, key))
            x1 = tuple(val[i] for i in p1)
            x2 = tuple(val[i] for i in p2)
            if c * m != c1[x1] * c2[x2]:
                return False
        return True

    for j in sorted(range(1 << n), key=lambda s: (card(s), s)):
        if card(j) < 2:
            continue
        connected = not any(factorizes(s.block1, s.block2) for s in enumerate_dissociations(j))
        if connected != (j in target):
            return False
    return True


def search_minimal(k: ConnectivityStructure, budget: SearchBudget | None = None) -> SearchResult:
    """Smallest uniform family found within ``budget`` realizing ``k``.

    Falls back to :func:`realize` when the search finds nothing, so the
    returned family always has structure ``k``.
    """
    budget = budget or SearchBudget()
    canonical = universe_size(k)
    examined = 0
    for m in budget.sizes(canonical):
        for rows in _candidates(k.n, m, budget.max_alphabet):
            if examined >= budget.max_candidates:
                return SearchResult(realize(k), examined, False, canonical)
            examined += 1
            if _has_structure(rows, k):
                cols = [[r[i] for r in rows] for i in range(k.n)]
                phi = validate_family(k.n, [Fraction(1, m)] * m, cols)
                if connectivity_structure(phi) != k:
                    raise AssertionError("search accepted a family with the wrong structure")
                return SearchResult(phi, examined, True, canonical)
    return SearchResult(realize(k), examined, False, canonical)


def minimize_family(k: ConnectivityStructure, budget: SearchBudget | None = None) -> RandomFamily:
    return search_minimal(k, budget).family
