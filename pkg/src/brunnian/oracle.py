"""Exhaustive catalogs of structures and brute-force reference computations.

Nothing here reuses the optimized paths it is meant to check: the catalog is
built by a closure-validating search, and the reference connectivity
structure recomputes every joint law from the outcomes with exact integer
numerators over the family's common denominator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from operator import itemgetter

from .constructions import realize
from .errors import NotClosed, TooLarge
from .family import RandomFamily, connectivity_structure
from .structure import ConnectivityStructure, validate_structure
from .subsets import card, check_ground, enumerate_dissociations, positions

MAX_CATALOG_N = 5


def _catalog_key(k: ConnectivityStructure) -> tuple:
    return (len(k.members), k.members)


@dataclass(frozen=True)
class StructureCatalog:
    n: int
    structures: tuple[ConnectivityStructure, ...]

    def __len__(self) -> int:
        return len(self.structures)

    def __iter__(self):
        return iter(self.structures)

    def __contains__(self, k: object) -> bool:
        return k in self.structures


def enumerate_structures(n: int) -> StructureCatalog:
    """Every integral connectivity structure on ``{1..n}``.

    Candidate sets of size >= 2 are decided from the largest down.  When a
    set is included every overlapping union with an already-included set has
    been decided, so a missing union prunes the branch immediately.
    """
    check_ground(n)
    if n > MAX_CATALOG_N:
        raise TooLarge(f"enumeration is limited to n <= {MAX_CATALOG_N}, got {n}")
    cands = sorted(
        (s for s in range(1 << n) if card(s) >= 2), key=lambda s: (-card(s), -s)
    )
    found: list[tuple[int, ...]] = []
    chosen: list[int] = []
    chosen_set: set[int] = set()

    def walk(i: int) -> None:
        if i == len(cands):
            found.append(tuple(chosen))
            return
        s = cands[i]
        walk(i + 1)
        if all(not (s & t) or (s | t) in chosen_set for t in chosen):
            chosen.append(s)
            chosen_set.add(s)
            walk(i + 1)
            chosen.pop()
            chosen_set.discard(s)

    walk(0)
    structures = [validate_structure(n, sets) for sets in found]
    structures.sort(key=_catalog_key)
    return StructureCatalog(n, tuple(structures))


def _joint(rows: list[tuple], weights: list[int], pos: list[int]) -> dict[tuple, int]:
    """Numerators of ``P(X_pos = x)`` over the family denominator, one pass over outcomes."""
    table: dict[tuple, int] = {}
    if not pos:
        return {(): sum(weights)}
    pick = itemgetter(*pos)
    single = len(pos) == 1
    for row, w in zip(rows, weights):
        key = (pick(row),) if single else pick(row)
        table[key] = table.get(key, 0) + w
    return table


def _respects(rows: list[tuple], weights: list[int], d: int, j1: int, j2: int) -> bool:
    p1, p2 = positions(j1), positions(j2)
    joint = _joint(rows, weights, p1 + p2)
    m1, m2 = _joint(rows, weights, p1), _joint(rows, weights, p2)
    # P(x1, x2) = P(x1) P(x2)  <=>  d * n(x1, x2) = n(x1) n(x2)
    for x1, x2 in product(m1, m2):
        if d * joint.get(x1 + x2, 0) != m1[x1] * m2[x2]:
            return False
    # tuples outside the marginal images have both sides equal to zero
    return True


def oracle_connectivity_structure(phi: RandomFamily) -> ConnectivityStructure:
    """Connectivity structure evaluated literally from its definition."""
    rows = [tuple(r) for r in phi.values.T.tolist()]
    weights = [int(w) for w in phi.weights]
    d = phi.denominator
    kept = []
    for j in range(1 << phi.n):
        if all(
            not _respects(rows, weights, d, s.block1, s.block2)
            for s in enumerate_dissociations(j)
        ):
            kept.append(j)
    return validate_structure(phi.n, kept)


@dataclass
class RoundTripEntry:
    structure: ConnectivityStructure
    universe: int
    optimized_ok: bool
    oracle_ok: bool

    @property
    def passed(self) -> bool:
        return self.optimized_ok and self.oracle_ok

    def line(self) -> str:
        return f"{len(self.structure.members)} {self.universe} {'PASS' if self.passed else 'FAIL'}"


@dataclass
class RoundTripReport:
    n: int
    entries: list[RoundTripEntry] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(e.passed for e in self.entries)

    @property
    def all_passed(self) -> bool:
        return self.passed == len(self.entries)

    def lines(self, footer: bool = False) -> list[str]:
        out = [e.line() for e in self.entries]
        if footer:
            out.append(f"# {self.passed}/{len(self.entries)} PASS on n={self.n}")
        return out


def check_roundtrip(k: ConnectivityStructure, use_oracle: bool = True) -> RoundTripEntry:
    phi = realize(k)
    optimized = connectivity_structure(phi) == k
    if not use_oracle:
        return RoundTripEntry(k, phi.size, optimized, optimized)
    try:
        oracle = oracle_connectivity_structure(phi) == k
    except NotClosed:
        oracle = False
    return RoundTripEntry(k, phi.size, optimized, oracle)


def verify_roundtrip(catalog, n: int | None = None, use_oracle: bool = True) -> RoundTripReport:
    """Realize every structure and recover it through both structure computations.

    Failures are recorded in the report, never raised.
    """
    structures = list(catalog)
    if n is None:
        n = catalog.n if isinstance(catalog, StructureCatalog) else structures[0].n
    report = RoundTripReport(n)
    for k in structures:
        report.entries.append(check_roundtrip(k, use_oracle))
    return report
