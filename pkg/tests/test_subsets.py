import pytest
from hypothesis import given, strategies as st

from brunnian.errors import BrunnianError, NotOverlapping, OutOfRange
from brunnian.subsets import (
    Dissociation,
    card,
    check_ground,
    contests,
    enumerate_dissociations,
    family_contests,
    format_subset,
    indices,
    restrict_dissociation,
    subset,
    submasks,
)

from conftest import S


def test_subset_roundtrip():
    assert subset([1, 3]) == 0b101
    assert indices(0b101) == [1, 3]
    assert format_subset(0) == "{}"


@pytest.mark.parametrize("n", [0, 17, -1])
def test_ground_bounds(n):
    with pytest.raises(OutOfRange):
        check_ground(n)


def test_dissociation_is_unordered():
    assert Dissociation(S(2), S(1)) == Dissociation(S(1), S(2))
    assert Dissociation(S(3, 4), S(1, 2)).block1 == S(1, 2)


@pytest.mark.parametrize("a, b", [(0, 1), (S(1, 2), S(2, 3))])
def test_dissociation_rejects_bad_blocks(a, b):
    with pytest.raises(BrunnianError):
        Dissociation(a, b)


def test_enumerate_small():
    assert enumerate_dissociations(S(1, 2)) == [Dissociation(S(1), S(2))]
    assert enumerate_dissociations(S(1)) == []
    assert enumerate_dissociations(0) == []
    three = enumerate_dissociations(S(1, 2, 3))
    assert three == [
        Dissociation(S(1), S(2, 3)),
        Dissociation(S(1, 2), S(3)),
        Dissociation(S(1, 3), S(2)),
    ]


def _splits_by_brute_force(j):
    # every ordered split into two nonempty parts, then forget the order
    out = set()
    for s in range(1, j):
        if s & ~j == 0 and s != j:
            out.add(frozenset([s, j ^ s]))
    return out


@given(st.integers(min_value=0, max_value=(1 << 8) - 1))
def test_enumerate_count_and_domain(j):
    found = enumerate_dissociations(j)
    if card(j) >= 2:
        assert len(found) == 2 ** (card(j) - 1) - 1
    else:
        assert found == []
    assert len(set(found)) == len(found)
    assert all(d.domain == j for d in found)
    assert {frozenset([d.block1, d.block2]) for d in found} == _splits_by_brute_force(j)
    assert [d.block1 for d in found] == sorted(d.block1 for d in found)


def test_submasks_complete():
    assert list(submasks(0b101)) == [0, 1, 4, 5]


def test_contests_examples():
    assert contests(S(1, 2), Dissociation(S(1), S(2)))
    for sigma in enumerate_dissociations(S(1, 2, 3, 4)):
        assert not contests(S(1), sigma)
    assert not contests(S(1, 3), Dissociation(S(1, 2), S(4)))


def test_family_contests_examples():
    assert family_contests([S(1, 2)], Dissociation(S(1), S(2)))
    assert not family_contests([], Dissociation(S(1), S(2)))
    assert family_contests([S(1, 2), S(3, 4)], Dissociation(S(1, 3), S(2, 4)))


def test_restrict_dissociation_examples():
    assert restrict_dissociation(Dissociation(S(1, 2), S(3, 4)), S(2, 3)) == Dissociation(S(2), S(3))
    assert restrict_dissociation(Dissociation(S(1), S(2, 3)), S(1, 2)) == Dissociation(S(1), S(2))
    with pytest.raises(NotOverlapping):
        restrict_dissociation(Dissociation(S(1), S(2, 3)), S(2, 3))


@given(st.integers(1, 31), st.integers(1, 31), st.integers(0, 63))
def test_joined_union_lemma(k1, k2, pick):
    # for overlapping K1, K2 every dissociation of the union is contested by one of them
    if not k1 & k2:
        return
    dis = enumerate_dissociations(k1 | k2)
    if not dis:
        return
    sigma = dis[pick % len(dis)]
    hits = [k for k in (k1, k2) if contests(k, sigma)]
    assert hits
    for k in hits:
        assert restrict_dissociation(sigma, k).domain == k
