from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetakirch.algebra import (
    BiPoly,
    LaurentPoly,
    T,
    U,
    bareiss_det,
    charpoly,
    cofactor_det,
    interpolate,
    laurent_quotient_at_one,
    poly_derivative,
    rational_det,
    substitute_curve,
)
from zetakirch.errors import DivisibilityError

u, t = BiPoly.u(), BiPoly.t()

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
bipolys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), small, max_size=6).map(BiPoly)
laurents = st.dictionaries(st.integers(-3, 3), small, max_size=5).map(LaurentPoly)


def test_squares_of_binomials():
    assert (1 - t) ** 2 == 1 - 2 * t + t * t
    assert ((1 - u) * t) ** 2 == t * t - 2 * u * t * t + u * u * t * t


def test_zero_coefficients_are_dropped():
    p = (u + t) - t
    assert p == u
    assert len(p) == 1


def test_terms_sorted_u_major():
    p = t**3 + u + u * t + 1
    assert [k for k, _ in p.terms()] == [(0, 0), (0, 3), (1, 0), (1, 1)]


def test_floats_rejected():
    with pytest.raises(TypeError):
        BiPoly.const(0.5)


def test_curve_substitution_of_one_minus_u():
    # 1 - u becomes t^-1 on u = 1 - 1/t
    assert substitute_curve(1 - u) == LaurentPoly.monomial(-1)
    assert substitute_curve(t * (1 - u)) == LaurentPoly.const(1)


def test_exact_division():
    p = (1 + u * t) * (1 - t) ** 3
    assert p.exact_div(1 - t) == (1 + u * t) * (1 - t) ** 2
    with pytest.raises(DivisibilityError):
        (1 + t).exact_div(1 - t)


def test_small_determinants():
    M = [[1 - t, u], [t, 1 + u]]
    assert bareiss_det(M) == (1 - t) * (1 + u) - u * t
    assert rational_det([[2, 1], [1, 2]]) == 3
    assert rational_det([[0, 1], [1, 0]]) == -1


def test_charpoly_of_companion():
    # det(xI - M) for M = [[0, -2], [1, 3]] is x^2 - 3x + 2
    assert charpoly([[0, -2], [1, 3]]) == [1, -3, 2]


def test_interpolate_recovers_cubic():
    xs = [0, 1, 2, 3]
    ys = [Fraction(x**3 - 2 * x + 5) for x in xs]
    assert interpolate(xs, ys) == [5, -2, 0, 1]


def test_quotient_at_one():
    p = LaurentPoly({0: 1, 1: -2, 2: 1}) * LaurentPoly({0: 3, 1: 4})
    assert laurent_quotient_at_one(p, 2) == 7
    with pytest.raises(DivisibilityError):
        laurent_quotient_at_one(LaurentPoly({0: 1, 1: -1}) + 1, 1)


def test_laurent_evaluation_stays_exact():
    p = LaurentPoly({-2: 1, 1: 3})
    assert p(2) == Fraction(1, 4) + 6
    assert isinstance(p(2), Fraction)


@given(bipolys, bipolys, small)
def test_derivative_is_linear(p, q, c):
    for var in (U, T):
        assert poly_derivative(p + q * c, var) == poly_derivative(p, var) + poly_derivative(q, var) * c


@given(bipolys, bipolys)
def test_product_rule(p, q):
    for var in (U, T):
        assert poly_derivative(p * q, var) == poly_derivative(p, var) * q + p * poly_derivative(q, var)


@given(bipolys, bipolys)
def test_curve_substitution_is_a_ring_map(p, q):
    assert substitute_curve(p * q) == substitute_curve(p) * substitute_curve(q)
    assert substitute_curve(p - q) == substitute_curve(p) - substitute_curve(q)


@given(bipolys, st.fractions(min_value=2, max_value=5, max_denominator=3))
def test_substitution_matches_evaluation(p, t0):
    assert substitute_curve(p)(t0) == p(1 - 1 / t0, t0)


@given(laurents, laurents, st.fractions(min_value=1, max_value=4, max_denominator=3))
def test_laurent_evaluation_is_multiplicative(p, q, t0):
    assert (p * q)(t0) == p(t0) * q(t0)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda k: st.lists(st.lists(bipolys, min_size=k, max_size=k), min_size=k, max_size=k)))
def test_bareiss_matches_cofactor(M):
    assert bareiss_det(M) == cofactor_det(M)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda k: st.lists(st.lists(small, min_size=k, max_size=k), min_size=k, max_size=k)))
def test_rational_det_matches_cofactor(M):
    assert rational_det(M) == cofactor_det(M)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda k: st.lists(st.lists(small, min_size=k, max_size=k), min_size=k, max_size=k)), small)
def test_charpoly_matches_determinant(M, x):
    n = len(M)
    c = charpoly(M)
    value = sum(ck * x ** (n - k) for k, ck in enumerate(c))
    shifted = [[(x if i == j else 0) - M[i][j] for j in range(n)] for i in range(n)]
    assert value == rational_det(shifted)


@given(laurents, st.integers(1, 3))
def test_quotient_at_one_roundtrip(q, k):
    p = q * LaurentPoly({0: 1, 1: -1}) ** k
    assert laurent_quotient_at_one(p, k) == q(1)
