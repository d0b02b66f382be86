"""Seeded random inputs for verification runs, all drawn from :class:`Lcg`."""

from __future__ import annotations

from fractions import Fraction

from .family import RandomFamily, validate_family
from .lcg import Lcg
from .oracle import StructureCatalog
from .structure import ConnectivityStructure


def sample_catalog(catalog: StructureCatalog, count: int, seed: int) -> list[ConnectivityStructure]:
    """``count`` distinct catalog entries, returned in catalog order."""
    rng = Lcg(seed)
    picks = sorted(rng.sample_indices(len(catalog), min(count, len(catalog))))
    return [catalog.structures[i] for i in picks]


def random_generators(rng: Lcg, n: int, max_count: int = 4) -> list[int]:
    return [rng.below(1 << n) for _ in range(rng.between(0, max_count))]


def dyadic_probs(rng: Lcg, m: int, exponent: int = 4) -> list[Fraction]:
    """``m`` probabilities with denominator ``2**exponent``; zero entries allowed."""
    units = [0] * m
    for _ in range(1 << exponent):
        units[rng.below(m)] += 1
    return [Fraction(u, 1 << exponent) for u in units]


def random_family(rng: Lcg, n: int, max_m: int = 6, max_alphabet: int = 3) -> RandomFamily:
    m = rng.between(1, max_m)
    probs = dyadic_probs(rng, m)
    variables = []
    for _ in range(n):
        a = rng.between(1, max_alphabet)
        variables.append([rng.below(a) for _ in range(m)])
    return validate_family(n, probs, variables)
