from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tatecalc.errors import DegreeMismatchError, GradingError, NotAUnitError, RingMismatchError, ValuationError
from tatecalc.fgl import class_series
from tatecalc.gradedring import mu_rational, n_mod2
from tatecalc.series import (
    LaurentSeries,
    grading_stats,
    holomorphic_part,
    lagrange_reverse,
    principal_part,
    ser_add,
    ser_compose,
    ser_derivative,
    ser_invert,
    ser_mul,
    ser_residue,
    ser_reverse,
    split,
)

from conftest import laurent, substitutions
from oracles import brute_convolution, geometric_inverse

MU = mu_rational()
N2 = n_mod2()
F = Fraction


def mono(ring, var, n, order, coeff=None):
    return LaurentSeries.monomial(ring, var, n, order, coeff)


def dense(series):
    """Series -> {n: {dense exponent tuple: coeff}} for the oracles."""
    ng = len(series.ring.generators)
    out = {}
    for n, p in series.coeffs.items():
        slot = {}
        for m, c in p.terms.items():
            v = [0] * ng
            for i, e in m:
                v[i] = e
            slot[tuple(v)] = c
        out[n] = slot
    return out


# ----------------------------------------------------------- construction

def test_grading_law_enforced(mu):
    with pytest.raises(GradingError):
        LaurentSeries(mu, "w", 0, {1: mu.gen("m2")}, 3)
    before = grading_stats["violations"]
    with pytest.raises(GradingError):
        LaurentSeries(mu, "w", 0, {0: mu.gen("m1")}, 3)
    assert grading_stats["violations"] == before + 1


def test_zero_series_any_degree(mu):
    assert LaurentSeries.zero(mu, "w", 3, 5) == LaurentSeries.zero(mu, "w", -2, 5)


# ------------------------------------------------------------------- add

def test_ser_add_examples(mu, n2):
    # homogeneous analogue of (w^-1 + 1) - w^-1 = 1
    m1 = mono(mu, "w", 0, 4, mu.gen("m1"))
    a = ser_add(mono(mu, "w", -1, 4), m1)
    assert ser_add(a, -mono(mu, "w", -1, 4)) == m1
    S = class_series(mu, 4, "w")
    assert ser_add(S, LaurentSeries.zero(mu, "w", 0, 4)) == S
    pi = class_series(n2, 6, "w")
    assert ser_add(pi, pi).is_zero()


def mu_one(ring, order):
    return LaurentSeries.one(ring, "w", order)


def test_ser_add_errors(mu, n2):
    with pytest.raises(DegreeMismatchError):
        ser_add(mono(mu, "w", -1, 4), mono(mu, "w", 1, 4))
    with pytest.raises(RingMismatchError):
        ser_add(mono(mu, "w", 1, 4), mono(mu, "z", 1, 4))
    with pytest.raises(RingMismatchError):
        ser_add(mono(mu, "w", 1, 4), mono(n2, "w", 1, 4))


def test_ser_add_order_is_min(mu):
    assert ser_add(mono(mu, "w", 1, 4), mono(mu, "w", 1, 7)).order == 4


# ------------------------------------------------------------------- mul

def test_ser_mul_examples(mu):
    assert ser_mul(mono(mu, "w", -1, 5), mono(mu, "w", 1, 5)).truncate(3) == mu_one(mu, 3)
    pi = class_series(mu, 5, "w")
    assert ser_mul(pi, mu_one(mu, 5)) == pi
    m1 = mu.gen("m1")
    a = LaurentSeries(mu, "z", -1, {1: mu.one(), 2: m1}, 5)
    b = LaurentSeries(mu, "z", -1, {1: mu.one(), 2: -m1}, 5)
    prod = ser_mul(a, b)
    expected = LaurentSeries(mu, "z", -2, {2: mu.one(), 4: -(m1 * m1)}, prod.order)
    assert prod == expected
    assert dense(prod) == brute_convolution(dense(a), dense(b))


def test_ser_mul_truncation_bookkeeping(mu):
    a = mono(mu, "w", -2, 3)
    b = class_series(mu, 5, "w")
    # a known through w^3 with valuation -2; b through w^5 with valuation 0
    assert ser_mul(a, b).order == min(3 + 0, 5 - 2)


@settings(max_examples=60, deadline=None)
@given(st.data())
@pytest.mark.parametrize("ring", [MU, N2], ids=["mu", "n2"])
def test_ser_mul_matches_brute_convolution(ring, data):
    a = data.draw(laurent(ring, "w", order=5))
    b = data.draw(laurent(ring, "w", order=5))
    prod = ser_mul(a, b)
    ref = {n: p for n, p in brute_convolution(dense(a), dense(b), ring.characteristic).items()
           if n <= prod.order}
    assert dense(prod) == ref


@settings(max_examples=60, deadline=None)
@given(st.data())
@pytest.mark.parametrize("ring", [MU, N2], ids=["mu", "n2"])
def test_ser_mul_associative_commutative(ring, data):
    a, b, c = (data.draw(laurent(ring, "w", order=5, depth=2)) for _ in range(3))
    assert ser_mul(a, b) == ser_mul(b, a)
    left, right = ser_mul(ser_mul(a, b), c), ser_mul(a, ser_mul(b, c))
    assert left.agrees_with(right)


# ---------------------------------------------------------------- invert

def test_invert_examples(mu, n2):
    assert ser_invert(mu_one(mu, 5)) == mu_one(mu, 5)
    inv_w = ser_invert(mono(mu, "w", 1, 5))
    assert inv_w.coeffs.keys() == {-1} and inv_w.degree == 1
    pi = class_series(n2, 6, "w")
    expected = geometric_inverse({n: p for n, p in dense(pi).items() if n > 0}, 6, len(n2.generators), char=2)
    got = ser_invert(pi)
    assert dense(got) == expected
    assert got.to_text() == "1 + x2*w^2 + (x2^2+x4)*w^4 + (x2^3+x6)*w^6"


def test_invert_non_unit(mu):
    with pytest.raises(NotAUnitError):
        ser_invert(LaurentSeries.zero(mu, "w", 0, 4))
    with pytest.raises(NotAUnitError):
        ser_invert(mono(mu, "w", 0, 4, mu.gen("m1")))


@settings(max_examples=50, deadline=None)
@given(st.data())
@pytest.mark.parametrize("ring", [MU, N2], ids=["mu", "n2"])
def test_invert_roundtrip(ring, data):
    f = data.draw(substitutions(ring, "w", order=7))
    inv = ser_invert(f)
    assert inv.degree == -f.degree and inv.min_exponent == -1
    one = ser_mul(f, inv)
    assert one == LaurentSeries.one(ring, "w", one.order)


# ------------------------------------------------------------ derivative

def test_derivative_examples(mu, n2):
    m1, m2 = mu.gen("m1"), mu.gen("m2")
    log = LaurentSeries(mu, "u", -1, {1: mu.one(), 2: m1 * F(1, 2), 3: m2 * F(1, 3)}, 3)
    assert ser_derivative(log) == LaurentSeries(mu, "u", 0, {0: mu.one(), 1: m1, 2: m2}, 2)
    assert ser_derivative(mu_one(mu, 4)).is_zero()
    d = ser_derivative(mono(mu, "z", -1, 4))
    assert d == LaurentSeries(mu, "z", 2, {-2: -mu.one()}, 3)
    # char 2: even exponents die
    assert ser_derivative(mono(n2, "w", 2, 4)).is_zero()
    assert ser_derivative(mono(n2, "w", 3, 4)) == mono(n2, "w", 2, 3)


# --------------------------------------------------------------- residue

def test_residue_examples(mu, n2):
    assert ser_residue(mono(mu, "z", -1, 3)) == 1
    pi = class_series(mu, 5, "z")
    r = ser_residue(pi)
    assert r.is_zero() and r.degree == -1


@settings(max_examples=100, deadline=None)
@given(st.data())
@pytest.mark.parametrize("ring", [MU, N2], ids=["mu", "n2"])
def test_residue_of_derivative_vanishes(ring, data):
    a = data.draw(laurent(ring, "z", order=6, depth=4))
    assert ser_residue(ser_derivative(a)).is_zero()


# --------------------------------------------------------------- compose

def test_compose_examples(mu):
    m1 = mu.gen("m1")
    f = LaurentSeries(mu, "z", -1, {1: mu.one(), 2: m1}, 6)
    assert ser_compose(mono(mu, "c", 1, 6), f) == f
    got = ser_compose(mono(mu, "c", -1, 6), f)
    # geometric series: 1/(z(1 + m1 z)) = z^-1 - m1 + m1^2 z - m1^3 z^2 + ...
    for n, expected in [(-1, mu.one()), (0, -m1), (1, m1 ** 2), (2, -(m1 ** 3))]:
        assert got.coefficient(n) == expected
    assert got.order == -1 + 6 - 1


def test_compose_precondition(mu):
    with pytest.raises(ValuationError):
        ser_compose(mono(mu, "c", 1, 4), mono(mu, "z", 2, 4))
    with pytest.raises(NotAUnitError):
        ser_compose(mono(mu, "c", 1, 4), mono(mu, "z", 1, 4, mu.gen("m1")))


@settings(max_examples=100, deadline=None)
@given(st.data())
@pytest.mark.parametrize("ring", [MU, N2], ids=["mu", "n2"])
def test_change_of_variables(ring, data):
    L = data.draw(laurent(ring, "c", order=6, depth=4))
    f = data.draw(substitutions(ring, "z", order=7))
    lhs = ser_residue(ser_mul(ser_compose(L, f), ser_derivative(f)))
    assert lhs == ser_residue(L)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_compose_is_a_ring_map(data):
    a = data.draw(laurent(MU, "c", order=5, depth=2))
    b = data.draw(laurent(MU, "c", order=5, depth=2))
    f = data.draw(substitutions(MU, "z", order=8))
    lhs = ser_compose(ser_mul(a, b), f)
    rhs = ser_mul(ser_compose(a, f), ser_compose(b, f))
    assert lhs.agrees_with(rhs)


# --------------------------------------------------------------- reverse

def test_reverse_examples(mu):
    z = mono(mu, "z", 1, 6)
    assert ser_reverse(z, "u") == mono(mu, "u", 1, 6)
    m1, m2 = mu.gen("m1"), mu.gen("m2")
    log = LaurentSeries(mu, "u", -1, {1: mu.one(), 2: m1 * F(1, 2), 3: m2 * F(1, 3)}, 3)
    expected = LaurentSeries(mu, "z", -1, {1: mu.one(), 2: -m1 * F(1, 2),
                                           3: m1 * m1 * F(1, 2) - m2 * F(1, 3)}, 3)
    assert ser_reverse(log, "z") == expected


def test_reverse_precondition(mu):
    with pytest.raises(ValuationError):
        ser_reverse(mono(mu, "z", 2, 4, mu.gen("m1")))


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_reverse_involution_and_lagrange_crosscheck(data):
    f = data.draw(substitutions(MU, "z", order=7))
    g = ser_reverse(f, "u")
    assert ser_reverse(g, "z") == f
    assert g == lagrange_reverse(f, "u")
    comp = ser_compose(f.rename("u"), g.rename("z"))
    assert comp == mono(MU, "z", 1, comp.order)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_reverse_char2(data):
    f = data.draw(substitutions(N2, "z", order=8))
    g = ser_reverse(f, "u")
    assert ser_compose(f.rename("u"), g.rename("z")).agrees_with(mono(N2, "z", 1, 8))


# ----------------------------------------------------------------- split

def test_split_examples(mu):
    # homogeneous analogue of w^-2 + 3 + w
    s = ser_add(ser_add(mono(mu, "w", -2, 4, mu.gen("m2")), mono(mu, "w", 0, 4, mu.gen("m4") * 3)),
                mono(mu, "w", 1, 4, mu.gen("m5")))
    hol, prin = split(s)
    assert hol.coeffs.keys() == {0, 1} and prin.coeffs.keys() == {-2}
    pi = class_series(mu, 4, "w")
    assert split(pi) == (pi, LaurentSeries.zero(mu, "w", 0, 4))
    cinv = mono(mu, "c", -1, 4)
    h, p = split(cinv)
    assert h.is_zero() and p == cinv


@settings(max_examples=100, deadline=None)
@given(st.data())
@pytest.mark.parametrize("ring", [MU, N2], ids=["mu", "n2"])
def test_split_exactness(ring, data):
    a = data.draw(laurent(ring, "w", order=6, depth=4))
    hol, prin = holomorphic_part(a), principal_part(a)
    assert ser_add(hol, prin) == a
    assert holomorphic_part(hol) == hol
    assert principal_part(hol).is_zero()
    assert hol.is_power_series() and prin.is_principal()


# -------------------------------------------------------------- grading

@settings(max_examples=200, deadline=None)
@given(st.data())
@pytest.mark.parametrize("ring", [MU, N2], ids=["mu", "n2"])
def test_grading_preserved_by_every_operation(ring, data):
    a = data.draw(laurent(ring, "w", order=5, depth=2))
    b = data.draw(laurent(ring, "w", order=5, depth=2, degree=a.degree))
    f = data.draw(substitutions(ring, "z", order=5))
    outs = [ser_add(a, b), ser_mul(a, b), ser_derivative(a), ser_compose(a, f),
            ser_reverse(f), ser_invert(f), holomorphic_part(a), principal_part(a)]
    for out in outs:
        for n, p in out.coeffs.items():
            assert p.degree == out.degree + n
    assert ser_residue(a).degree == a.degree - 1
