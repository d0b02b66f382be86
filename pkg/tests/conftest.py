import pytest

from brunnian import enumerate_structures, subset


def S(*idx):
    return subset(idx)


@pytest.fixture(scope="session")
def catalogs():
    return {n: enumerate_structures(n) for n in range(1, 5)}


from fractions import Fraction  # noqa: E402

from hypothesis import strategies as st  # noqa: E402

from brunnian import validate_family  # noqa: E402


@st.composite
def families(draw, min_n=1, max_n=4, max_m=6, max_alphabet=3):
    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(1, max_m))
    weights = draw(st.lists(st.integers(0, 5), min_size=m, max_size=m))
    if not any(weights):
        weights[0] = 1
    total = sum(weights)
    probs = [Fraction(w, total) for w in weights]
    variables = [
        draw(st.lists(st.integers(0, max_alphabet - 1), min_size=m, max_size=m)) for _ in range(n)
    ]
    return validate_family(n, probs, variables)


def brute_respects(phi, sigma):
    """Factorization test straight from the definition, over the product of images."""
    from itertools import product

    from brunnian.subsets import positions

    pos1, pos2 = positions(sigma.block1), positions(sigma.block2)
    probs = phi.probs
    images = {i: sorted(set(phi.variable(i + 1))) for i in pos1 + pos2}

    def prob(assign):
        return sum(
            (p for w, p in enumerate(probs)
             if all(phi.values[i, w] == v for i, v in assign.items())),
            Fraction(0),
        )

    for x1 in product(*(images[i] for i in pos1)):
        for x2 in product(*(images[i] for i in pos2)):
            a1 = dict(zip(pos1, x1))
            a2 = dict(zip(pos2, x2))
            if prob({**a1, **a2}) != prob(a1) * prob(a2):
                return False
    return True


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
