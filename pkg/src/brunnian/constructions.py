"""Canonical families: the constant family, parity families, realizations, wedge."""

from __future__ import annotations

from functools import reduce

import numpy as np

from .errors import GroundMismatch, TooSmall
from .family import RandomFamily, connectivity_structure, tensor
from .structure import ConnectivityStructure, intersection, irreducibles
from .subsets import card, check_ground, check_within, positions


def discrete_family(n: int) -> RandomFamily:
    """One outcome of probability 1; every variable is the constant 0."""
    check_ground(n)
    return RandomFamily(n, np.ones(1, dtype=np.int64), 1, np.zeros((n, 1), dtype=np.int64))


def brunnian_family(n: int, m_set: int) -> RandomFamily:
    """Uniform bits on ``2**(|M|-1)`` outcomes with a parity variable.

    With ``M = {i_1 < ... < i_m}``, variables ``i_1 .. i_{m-1}`` read the
    coordinates of the outcome, ``i_m`` reads their sum mod 2, and variables
    outside ``M`` are constant 0.  Outcome ``w`` has coordinate ``k`` equal to
    bit ``m - 2 - k`` of ``w``, so outcomes are listed in lexicographic order.
    """
    check_ground(n)
    check_within(n, m_set)
    m = card(m_set)
    if m < 2:
        raise TooSmall(f"a parity family needs |M| >= 2, got {m}")
    size = 1 << (m - 1)
    omega = np.arange(size, dtype=np.int64)
    values = np.zeros((n, size), dtype=np.int64)
    members = positions(m_set)
    parity = np.zeros(size, dtype=np.int64)
    for k, i in enumerate(members[:-1]):
        bit = (omega >> (m - 2 - k)) & 1
        values[i] = bit
        parity ^= bit
    values[members[-1]] = parity
    return RandomFamily(n, np.ones(size, dtype=np.int64), size, values)


def realize(k: ConnectivityStructure) -> RandomFamily:
    """A family whose connectivity structure is exactly ``k``.

    Tensor product of the parity families of the irreducible members, taken
    in increasing bitmask order; the constant family when there are none.
    """
    irr = sorted(irreducibles(k))
    if not irr:
        return discrete_family(k.n)
    return reduce(tensor, (brunnian_family(k.n, s) for s in irr))


def universe_size(k: ConnectivityStructure) -> int:
    """Outcome count of :func:`realize` for ``k``."""
    return 1 << sum(card(s) - 1 for s in irreducibles(k))


def wedge(phi: RandomFamily, psi: RandomFamily) -> RandomFamily:
    """Realization of the intersection of the two connectivity structures."""
    if phi.n != psi.n:
        raise GroundMismatch(f"ground sizes differ: {phi.n} vs {psi.n}")
    return realize(intersection(connectivity_structure(phi), connectivity_structure(psi)))
