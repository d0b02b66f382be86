"""Finite families of discrete random variables and their connectivity structure.

Probabilities are exact.  A family stores an integer weight per outcome over
one common denominator, so ``P(w) = weights[w] / denominator``; every
factorization test compares integers and never touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EmptySubset,
    GroundMismatch,
    LengthMismatch,
    NegativeProbability,
    ProbSumNotOne,
)
from .structure import ConnectivityStructure, _canonical, connected_components
from .subsets import (
    Dissociation,
    card,
    check_ground,
    check_within,
    enumerate_dissociations,
    full,
    positions,
)

# products of two weights must stay below this to use int64 arithmetic
_INT64_SAFE = 1 << 62


def _as_weights(values: Sequence[int], bound: int) -> np.ndarray:
    """Integer array, int64 when ``bound**2`` fits, Python ints otherwise."""
    if bound * bound < _INT64_SAFE:
        return np.asarray(values, dtype=np.int64)
    return np.array([int(v) for v in values], dtype=object)


def _dense_codes(row: np.ndarray) -> np.ndarray:
    """Order-preserving relabeling of a row of codes onto 0..k-1."""
    _, inv = np.unique(row, return_inverse=True)
    return inv.astype(np.int64).reshape(-1)


class RandomFamily:
    """A finite probability space together with ``n`` random variables.

    ``values`` has shape ``(n, m)``: row ``i`` is the value code of variable
    ``i + 1`` on each outcome.  Codes are normalized to a dense range per
    variable on construction.  Instances are treated as immutable.
    """

    __slots__ = ("n", "weights", "denominator", "values")

    def __init__(self, n: int, weights: np.ndarray, denominator: int, values: np.ndarray):
        self.n = n
        self.weights = weights
        self.denominator = denominator
        self.values = values

    @property
    def size(self) -> int:
        return self.values.shape[1]

    @property
    def probs(self) -> list[Fraction]:
        d = self.denominator
        return [Fraction(int(w), d) for w in self.weights]

    def variable(self, i: int) -> list[int]:
        """Value codes of variable ``i`` (1-based)."""
        return [int(v) for v in self.values[i - 1]]

    def range_size(self, i: int) -> int:
        row = self.values[i - 1]
        return int(row.max()) + 1 if row.size else 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RandomFamily):
            return NotImplemented
        return (
            self.n == other.n
            and self.values.shape == other.values.shape
            and bool(np.array_equal(self.values, other.values))
            and self.probs == other.probs
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"RandomFamily(n={self.n}, omega={self.size})"


def _from_fractions(n: int, probs: Sequence[Fraction], values: np.ndarray) -> RandomFamily:
    d = lcm(*(p.denominator for p in probs)) if probs else 1
    weights = _as_weights([p.numerator * (d // p.denominator) for p in probs], d)
    return RandomFamily(n, weights, d, values)


def validate_family(n: int, probs: Iterable, variables: Iterable[Sequence[int]]) -> RandomFamily:
    """Check a probability space and its variables, normalize value codes.

    ``probs`` accepts anything :class:`fractions.Fraction` understands except
    floats, which would smuggle rounding into an exact computation.
    """
    check_ground(n)
    ps = []
    for p in probs:
        if isinstance(p, float):
            raise TypeError("floating-point probabilities are not accepted")
        ps.append(Fraction(p))
    if not ps:
        raise LengthMismatch("the outcome space must be nonempty")
    for k, p in enumerate(ps):
        if p < 0:
            raise NegativeProbability(f"outcome {k} has probability {p}")
    total = sum(ps, Fraction(0))
    if total != 1:
        raise ProbSumNotOne(f"probabilities sum to {total}, not 1")
    rows = [list(v) for v in variables]
    if len(rows) != n:
        raise LengthMismatch(f"expected {n} variables, got {len(rows)}")
    m = len(ps)
    for i, row in enumerate(rows, start=1):
        if len(row) != m:
            raise LengthMismatch(f"variable {i} has {len(row)} entries for {m} outcomes")
        if any(int(v) != v or v < 0 for v in row):
            raise LengthMismatch(f"variable {i} has a value code that is not a non-negative integer")
    values = np.empty((n, m), dtype=np.int64)
    for i, row in enumerate(rows):
        values[i] = _dense_codes(np.asarray(row, dtype=np.int64))
    return _from_fractions(n, ps, values)


@dataclass(frozen=True)
class JointDistribution:
    """Law of ``X_J``: value tuples (in increasing index order) to probabilities.

    Only tuples with positive probability appear in ``table``.
    """

    domain: int
    table: dict

    def __getitem__(self, key: tuple) -> Fraction:
        return self.table.get(key, Fraction(0))


def joint_distribution(phi: RandomFamily, j: int) -> JointDistribution:
    check_within(phi.n, j)
    pos = positions(j)
    table: dict[tuple, Fraction] = {}
    cols = phi.values[pos].T.tolist() if pos else [()] * phi.size
    d = phi.denominator
    for key, w in zip(cols, phi.weights.tolist()):
        if w:
            key = tuple(key)
            table[key] = table.get(key, 0) + w
    return JointDistribution(j, {k: Fraction(w, d) for k, w in table.items()})


class _Marginals:
    """Per-subset atom labels and masses, shared across one structure computation.

    For a subset ``J`` the positive-probability outcomes are labelled by the
    distinct value tuple ``X_J`` they produce.  Labels for ``J`` are built from
    those of ``J`` minus its top element, so each subset costs one pass.
    """

    def __init__(self, phi: RandomFamily):
        keep = np.nonzero(phi.weights)[0]
        self.values = phi.values[:, keep]
        self.weights = phi.weights[keep]
        self.denominator = phi.denominator
        m = len(keep)
        self.labels = {0: np.zeros(m, dtype=np.int64)}
        total = self.weights.sum() if m else 0
        self.masses = {0: np.array([total], dtype=self.weights.dtype)}
        self.first = {0: np.zeros(1, dtype=np.int64)}

    def get(self, j: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        if j not in self.labels:
            top = j.bit_length() - 1
            below = j ^ (1 << top)
            lab, _, _ = self.get(below)
            col = self.values[top]
            width = int(col.max()) + 1 if col.size else 1
            key = lab * width + col
            _, first, inv = np.unique(key, return_index=True, return_inverse=True)
            inv = inv.reshape(-1)
            mass = np.zeros(len(first), dtype=self.weights.dtype)
            np.add.at(mass, inv, self.weights)
            self.labels[j] = inv
            self.masses[j] = mass
            self.first[j] = first
        return self.labels[j], self.masses[j], self.first[j]

    def factorizes(self, sigma: Dissociation) -> bool:
        lab1, c1, _ = self.get(sigma.block1)
        lab2, c2, _ = self.get(sigma.block2)
        _, cj, first = self.get(sigma.domain)
        # the joint support sits inside the product of marginal supports
        if len(cj) != len(c1) * len(c2):
            return False
        lhs = cj * self.denominator
        rhs = c1[lab1[first]] * c2[lab2[first]]
        return bool(np.all(lhs == rhs))


def family_respects(phi: RandomFamily, sigma: Dissociation) -> bool:
    """True when the law of ``X_J`` on the domain factorizes through the two blocks."""
    check_within(phi.n, sigma.domain)
    return _Marginals(phi).factorizes(sigma)


def connectivity_structure(phi: RandomFamily) -> ConnectivityStructure:
    """Subsets none of whose dissociations the family respects.

    Subsets are visited by increasing cardinality; marginal tables are cached
    for the duration of the call.
    """
    n = phi.n
    marg = _Marginals(phi)
    members = [0] + [1 << i for i in range(n)]
    for j in sorted(range(1 << n), key=lambda s: (card(s), s)):
        if card(j) < 2:
            continue
        if not any(marg.factorizes(sigma) for sigma in enumerate_dissociations(j)):
            members.append(j)
    return _canonical(n, members)


def restrict_family(phi: RandomFamily, j: int) -> RandomFamily:
    """Keep only the variables indexed by ``j``, relabelled ``1..|j|`` in order."""
    check_within(phi.n, j)
    if j == 0:
        raise EmptySubset("cannot restrict a family to the empty set")
    pos = positions(j)
    return RandomFamily(len(pos), phi.weights, phi.denominator, phi.values[pos].copy())


def tensor(phi: RandomFamily, psi: RandomFamily) -> RandomFamily:
    """Product family on the product space, outcomes ``(w, x)`` in row-major order.

    Variable ``i`` maps ``(w, x)`` to the pair of codes, encoded as
    ``X_i(w) * k_i + Y_i(x)`` with ``k_i`` the range size of ``Y_i``, then
    densely relabelled.
    """
    if phi.n != psi.n:
        raise GroundMismatch(f"ground sizes differ: {phi.n} vs {psi.n}")
    m1, m2 = phi.size, psi.size
    d = phi.denominator * psi.denominator
    if d * d < _INT64_SAFE and phi.weights.dtype != object and psi.weights.dtype != object:
        weights = np.outer(phi.weights, psi.weights).reshape(-1)
    else:
        weights = np.array(
            [int(a) * int(b) for a in phi.weights for b in psi.weights], dtype=object
        )
    values = np.empty((phi.n, m1 * m2), dtype=np.int64)
    for i in range(phi.n):
        k = int(psi.values[i].max()) + 1
        code = np.repeat(phi.values[i], m2) * k + np.tile(psi.values[i], m1)
        values[i] = _dense_codes(code)
    return RandomFamily(phi.n, weights, d, values)


def check_component_independence(phi: RandomFamily) -> bool:
    """True when the blocks of variables over the connected components are independent.

    Compares the law of ``X_I`` with the product of the component laws on
    every tuple of positive-probability component values.
    """
    comps = connected_components(connectivity_structure(phi))
    marg = _Marginals(phi)
    whole = full(phi.n)
    _, cj, first = marg.get(whole)
    expected = 1
    for c in comps:
        expected *= len(marg.get(c)[1])
    if len(cj) != expected:
        return False
    d = marg.denominator
    lhs = [int(v) * d ** (len(comps) - 1) for v in cj]
    rhs = [1] * len(cj)
    for c in comps:
        lab, mass, _ = marg.get(c)
        picked = mass[lab[first]]
        rhs = [r * int(v) for r, v in zip(rhs, picked)]
    return lhs == rhs
