import random

import pytest
from hypothesis import strategies as st

from fraisse_lab.fraisse import ETA, OMEGA, OMEGA_STAR, order_term
from fraisse_lab.omega import OmegaTerm
from fraisse_lab.orders import Fin, LexPair, Omega, OmegaStar
from fraisse_lab.theta import random_term

atomic_orders = st.one_of(
    st.integers(1, 4).map(Fin), st.just(Omega()), st.just(OmegaStar())
)

base_orders = st.recursive(
    atomic_orders, lambda inner: st.builds(LexPair, inner, inner), max_leaves=4
)


@st.composite
def elements_of(draw, X, bound=6):
    """An element code of X with atomic coordinates below ``bound``."""
    if isinstance(X, LexPair):
        return (draw(elements_of(X.left, bound)), draw(elements_of(X.right, bound)))
    if isinstance(X, Fin):
        return draw(st.integers(0, X.n - 1))
    return draw(st.integers(0, bound - 1))


@st.composite
def omega_terms_over(draw, n, max_len=6):
    xs = draw(st.lists(st.integers(0, n - 1), max_size=max_len))
    return OmegaTerm(tuple(sorted(xs, reverse=True)))


order_atoms = st.one_of(st.integers(1, 3), st.sampled_from([OMEGA, OMEGA_STAR, ETA]))
order_terms = st.lists(order_atoms, min_size=1, max_size=5).map(lambda a: order_term(*a))

# random_term does its own rejection sampling, so draw a seed and defer to it
theta_seeds = st.integers(0, 2**32 - 1)


def theta_sample(seed, X, max_size=7, bound=3):
    return random_term(random.Random(seed), X, max_size, bound)


@pytest.fixture
def rng():
    return random.Random(0)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
