from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaform.core.errors import NotPolynomial
from zetaform.core.exactalg import (
    MultiLaurent,
    UniPoly,
    bernoulli,
    binomial_poly,
    format_rational,
    harmonic,
    invert_substitute,
    product_of_univariates,
    substitute_one_minus,
)

from .conftest import laurent_polys, polynomials, unipolys


def x(n, i):
    return MultiLaurent.variable(n, i - 1)


def one(n):
    return MultiLaurent.constant(n, 1)


@pytest.mark.parametrize("r, m, expected", [(1, 1, 1), (1, 2, Fraction(3, 2)), (2, 2, Fraction(5, 4)), (3, 0, 0)])
def test_harmonic(r, m, expected):
    assert harmonic(r, m) == expected


def test_harmonic_rejects_bad_arguments():
    with pytest.raises(ValueError):
        harmonic(0, 3)
    with pytest.raises(ValueError):
        harmonic(2, -1)


@pytest.mark.parametrize(
    "m, expected",
    [(0, 1), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (3, 0), (4, Fraction(-1, 30)), (12, Fraction(-691, 2730))],
)
def test_bernoulli(m, expected):
    assert bernoulli(m) == expected


@given(st.integers(1, 5), st.integers(1, 50))
def test_harmonic_steps_by_one_term(r, m):
    assert harmonic(r, m) - harmonic(r, m - 1) == Fraction(1, m ** r)


@given(st.integers(1, 20))
def test_bernoulli_recurrence(m):
    assert sum(comb(m + 1, j) * bernoulli(j) for j in range(m + 1)) == 0


def test_binomial_poly():
    assert binomial_poly(1) == UniPoly.constant(1)
    assert binomial_poly(2) == UniPoly((1, 1))
    assert binomial_poly(3) == UniPoly((1, Fraction(3, 2), Fraction(1, 2)))
    with pytest.raises(ValueError):
        binomial_poly(0)


def test_binomial_poly_values():
    for N in range(1, 7):
        p = binomial_poly(N)
        for k in range(10):
            assert p(k) == comb(k + N - 1, N - 1)


def test_substitute_one_minus_examples():
    assert substitute_one_minus(x(1, 1)) == one(1) - x(1, 1)
    assert substitute_one_minus(x(2, 1) * x(2, 2)) == one(2) - x(2, 1) - x(2, 2) + x(2, 1) * x(2, 2)
    assert substitute_one_minus(one(2) - x(2, 1) * x(2, 2)) == x(2, 1) + x(2, 2) - x(2, 1) * x(2, 2)


def test_substitute_one_minus_truncated():
    P = (one(2) - x(2, 1)) * (one(2) - x(2, 2)) + x(2, 1) ** 3
    full = substitute_one_minus(P)
    low = substitute_one_minus(P, below_degree=2)
    assert all(sum(exps) < 2 for exps in low.terms)
    for exps, c in full.items():
        if sum(exps) < 2:
            assert low.coefficient(exps) == c


def test_substitute_one_minus_rejects_laurent():
    with pytest.raises(NotPolynomial):
        substitute_one_minus(MultiLaurent(1, {(-1,): 1}))


@settings(max_examples=60, deadline=None)
@given(polynomials(max_vars=4, max_degree=6))
def test_substitute_one_minus_is_an_involution(P):
    assert substitute_one_minus(substitute_one_minus(P)) == P


def test_invert_substitute_examples():
    assert invert_substitute(x(1, 1), 0) == MultiLaurent(1, {(-1,): 1})
    P = one(2) + x(2, 1) * x(2, 2)
    assert invert_substitute(P, 1) == P
    assert invert_substitute(MultiLaurent(2, {(2, 1): 1}), 2) == x(2, 2)


@given(st.data())
def test_invert_substitute_twice_is_identity(data):
    n = data.draw(st.integers(1, 4))
    P = data.draw(laurent_polys(n, min_degree=-3, max_degree=3))
    m = data.draw(st.integers(-3, 5))
    assert invert_substitute(invert_substitute(P, m), m) == P


def test_laurent_arithmetic():
    a = x(2, 1) + 2
    b = x(2, 2) - Fraction(1, 2)
    assert a * b == x(2, 1) * x(2, 2) - x(2, 1).scale(Fraction(1, 2)) + x(2, 2).scale(2) - 1
    assert (a - a).is_zero()
    assert (a ** 2).coefficient((1, 0)) == 4
    assert a.evaluate([3, 5]) == 5
    assert (x(3, 1) * x(3, 3) ** 2).diff(2) == (x(3, 1) * x(3, 3)).scale(2)


def test_laurent_mismatched_variables():
    with pytest.raises(ValueError):
        x(2, 1) + x(3, 1)
    with pytest.raises(ValueError):
        MultiLaurent(2, {(1,): 1})


def test_laurent_substitute_and_drop():
    P = x(3, 1) * x(3, 2) + x(3, 3)
    assert P.substitute(1, 1) == x(3, 1) + x(3, 3)
    assert P.substitute(1, 0).drop_variable(1) == x(2, 2)
    with pytest.raises(ValueError):
        P.drop_variable(0)
    assert x(2, 1).insert_variable(0) == x(3, 2)


def test_laurent_printing():
    P = MultiLaurent(2, {(2, 1): Fraction(-3, 2), (1, 0): 1})
    assert str(P) == "-3/2*x1^2*x2 + x1"
    assert str(MultiLaurent.zero(3)) == "0"
    assert str(MultiLaurent.constant(1, -2)) == "-2"


def test_laurent_queries():
    P = MultiLaurent(3, {(0, 2, 1): 1, (1, 1, 0): -1})
    assert P.is_polynomial()
    assert P.min_total_degree() == 2
    assert P.max_exponent(1) == 2
    assert P.mentioned_variables() == [0, 1, 2]
    assert MultiLaurent.zero(2).min_total_degree() is None
    assert not MultiLaurent(1, {(-2,): 1}).is_polynomial()


@given(st.data())
def test_laurent_ring_laws(data):
    n = data.draw(st.integers(1, 3))
    a, b, c = (data.draw(laurent_polys(n, min_degree=-2, max_degree=2)) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a


def test_unipoly_basics():
    p = UniPoly((1, 2, 1))
    assert p.degree == 2
    assert p(1) == 4
    assert p.derivative() == UniPoly((2, 2))
    assert p.shift(1) == UniPoly((4, 4, 1))
    assert str(UniPoly((-1, 0, Fraction(1, 2)))) == "1/2*k^2 - 1"
    assert str(UniPoly()) == "0"
    assert UniPoly.linear(3).to_str("t") == "t + 3"


@given(unipolys(5), unipolys(3).filter(lambda d: not d.is_zero()))
def test_unipoly_divmod(p, d):
    q, r = p.divmod(d)
    assert q * d + r == p
    assert r.is_zero() or r.degree < d.degree


def test_unipoly_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        UniPoly((1, 1)).divmod(UniPoly())


def test_product_of_univariates():
    f = UniPoly((1, -1))
    g = UniPoly.monomial(2)
    P = product_of_univariates([f, g])
    assert P == (one(2) - x(2, 1)) * x(2, 2) ** 2


def test_format_rational():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"
