from fractions import Fraction
from itertools import product

import pytest

from brunnian import (
    GroundMismatch,
    TooSmall,
    brunnian_family,
    connectivity_structure,
    discrete,
    discrete_family,
    generate,
    gross,
    intersection,
    irreducibles,
    oracle_connectivity_structure,
    realize,
    structure_sum,
    tensor,
    universe_size,
    wedge,
)
from brunnian.lcg import Lcg

from conftest import S, families  # noqa: F401


class TestDiscreteFamily:
    def test_one_variable(self):
        phi = discrete_family(1)
        assert phi.size == 1 and phi.probs == [1] and phi.variable(1) == [0]

    def test_structure(self):
        assert connectivity_structure(discrete_family(3)) == discrete(3)

    def test_neutral_for_tensor(self, catalogs):
        for k in catalogs[3]:
            phi = realize(k)
            assert connectivity_structure(tensor(discrete_family(3), phi)) == k


class TestBrunnianFamily:
    def test_pair(self):
        phi = brunnian_family(2, S(1, 2))
        assert phi.size == 2 and phi.probs == [Fraction(1, 2)] * 2
        assert phi.variable(1) == phi.variable(2) == [0, 1]

    def test_layout(self):
        phi = brunnian_family(4, S(1, 2, 4))
        assert phi.size == 4
        for w, (a, b) in enumerate(product((0, 1), repeat=2)):
            assert (phi.variable(1)[w], phi.variable(2)[w], phi.variable(4)[w]) == (a, b, a ^ b)
        assert phi.variable(3) == [0] * 4

    def test_triple(self):
        assert connectivity_structure(brunnian_family(3, S(1, 2, 3))) == generate(3, [S(1, 2, 3)])

    def test_spread_triple(self):
        phi = brunnian_family(5, S(1, 2, 4))
        k = oracle_connectivity_structure(phi)
        assert irreducibles(k) == [S(1, 2, 4)]
        assert k.nontrivial == (S(1, 2, 4),)
        assert phi.variable(3) == phi.variable(5) == [0] * 4

    @pytest.mark.parametrize("m_set", [0, S(2)])
    def test_too_small(self, m_set):
        with pytest.raises(TooSmall):
            brunnian_family(3, m_set)

    def test_every_subset_n4(self):
        for m_set in range(16):
            if bin(m_set).count("1") >= 2:
                phi = brunnian_family(4, m_set)
                assert connectivity_structure(phi) == generate(4, [m_set])
                assert phi.size == 2 ** (bin(m_set).count("1") - 1)


class TestRealize:
    def test_gross_n3(self):
        phi = realize(gross(3))
        assert phi.size == 2 ** (3 * 2 // 2) == 8
        assert len(irreducibles(gross(3))) == 3
        assert connectivity_structure(phi) == gross(3)

    def test_discrete(self):
        assert realize(discrete(3)) == discrete_family(3)

    def test_chain(self):
        k = generate(3, [S(1, 2), S(2, 3)])
        phi = realize(k)
        assert phi.size == 4
        assert oracle_connectivity_structure(phi) == k

    def test_fold_order(self):
        k = generate(3, [S(1, 2), S(2, 3)])
        manual = tensor(brunnian_family(3, S(1, 2)), brunnian_family(3, S(2, 3)))
        assert realize(k) == manual

    def test_round_trip_and_size(self, catalogs):
        for cat in catalogs.values():
            for k in cat:
                phi = realize(k)
                assert connectivity_structure(phi) == k
                assert phi.size == universe_size(k) == 2 ** sum(
                    bin(s).count("1") - 1 for s in irreducibles(k)
                )


def _pairs(catalogs, n, count, seed):
    rng = Lcg(seed)
    cat = catalogs[n].structures
    return [(rng.choice(cat), rng.choice(cat)) for _ in range(count)]


class TestProductCorollaries:
    def test_irreducibles_of_product_are_inherited(self, catalogs):
        for a, b in _pairs(catalogs, 4, 40, seed=3):
            k = connectivity_structure(tensor(realize(a), realize(b)))
            assert k == structure_sum(a, b)
            assert set(irreducibles(k)) <= set(irreducibles(a)) | set(irreducibles(b))

    def test_irreducible_union_can_be_strict(self):
        # {1,2,3} is irreducible for the triple parity family but is generated
        # by {1,2} and {2,3} once the two pair families are multiplied in
        phi = brunnian_family(3, S(1, 2, 3))
        psi = tensor(brunnian_family(3, S(1, 2)), brunnian_family(3, S(2, 3)))
        k = connectivity_structure(tensor(phi, psi))
        assert irreducibles(k) == [S(1, 2), S(2, 3)]
        union = set(irreducibles(connectivity_structure(phi))) | set(
            irreducibles(connectivity_structure(psi))
        )
        assert union == {S(1, 2), S(2, 3), S(1, 2, 3)}

    def test_structure_level_algebra(self, catalogs):
        rng = Lcg(11)
        cat = catalogs[3].structures
        for _ in range(30):
            f, g, h = (realize(rng.choice(cat)) for _ in range(3))
            kappa = connectivity_structure
            assert kappa(tensor(tensor(f, g), h)) == kappa(tensor(f, tensor(g, h)))
            assert kappa(tensor(f, g)) == kappa(tensor(g, f))
            assert kappa(tensor(f, f)) == kappa(f)

    def test_sandwich(self, catalogs):
        cat = catalogs[3].structures
        for lo, hi in product(cat, repeat=2):
            if not lo.issubset(hi):
                continue
            between = [k for k in cat if lo.issubset(k) and k.issubset(hi)]
            for a, b in product(between[:4], repeat=2):
                k = connectivity_structure(tensor(realize(a), realize(b)))
                assert lo.issubset(k) and k.issubset(hi)

    def test_infinitely_many_realizations(self, catalogs):
        for k in catalogs[3]:
            if k == discrete(3):
                continue
            phi = realize(k)
            chain = [phi, tensor(phi, phi), tensor(tensor(phi, phi), phi)]
            sizes = [f.size for f in chain]
            assert sizes[0] < sizes[1] < sizes[2]
            assert all(connectivity_structure(f) == k for f in chain)


class TestWedge:
    def test_idempotent(self, catalogs):
        for k in catalogs[3]:
            phi = realize(k)
            assert connectivity_structure(wedge(phi, phi)) == k

    def test_triple_and_pair(self):
        a, b = brunnian_family(3, S(1, 2, 3)), brunnian_family(3, S(1, 2))
        assert connectivity_structure(a).nontrivial == (S(1, 2, 3),)
        assert connectivity_structure(b).nontrivial == (S(1, 2),)
        assert connectivity_structure(wedge(a, b)) == discrete(3)

    def test_gross(self):
        phi = realize(gross(3))
        assert connectivity_structure(wedge(phi, phi)) == gross(3)

    def test_intersection(self, catalogs):
        for a, b in _pairs(catalogs, 4, 25, seed=5):
            w = wedge(realize(a), realize(b))
            assert connectivity_structure(w) == intersection(a, b)

    def test_ground_mismatch(self):
        with pytest.raises(GroundMismatch):
            wedge(discrete_family(2), discrete_family(3))
