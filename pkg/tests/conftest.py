import random

import pytest
from hypothesis import strategies as st

from tatecalc.gradedring import GradedPolynomial, mu_rational, n_mod2
from tatecalc.series import LaurentSeries

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def mu():
    return mu_rational()


@pytest.fixture(scope="session")
def n2():
    return n_mod2()


@pytest.fixture
def rng():
    return random.Random(12345)


def scalars(ring):
    if ring.characteristic == 2:
        return st.just(1)
    return st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool)


@st.composite
def polys(draw, ring, degree, max_terms=4):
    monomials = ring.monomials_of_degree(degree)
    if not monomials:
        return ring.zero(degree)
    chosen = draw(st.lists(st.sampled_from(monomials), max_size=max_terms, unique=True))
    return GradedPolynomial(ring, {m: draw(scalars(ring)) for m in chosen}, degree)


@st.composite
def laurent(draw, ring, variable, order=6, depth=3, degree=None):
    low = -draw(st.integers(0, depth))
    if degree is None:
        degree = draw(st.integers(0, depth + 2))
    coeffs = {}
    for n in range(low, order + 1):
        p = draw(polys(ring, degree + n, max_terms=2))
        if p.terms:
            coeffs[n] = p
    return LaurentSeries(ring, variable, degree, coeffs, order, low)


@st.composite
def substitutions(draw, ring, variable="z", order=6):
    lead = draw(scalars(ring))
    coeffs = {1: ring.constant(lead)}
    for n in range(2, order + 1):
        p = draw(polys(ring, n - 1, max_terms=2))
        if p.terms:
            coeffs[n] = p
    return LaurentSeries(ring, variable, -1, coeffs, order, 1)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
