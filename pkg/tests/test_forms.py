from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaform.core.errors import LemmaInapplicable, NotFactorable, NotPolynomial
from zetaform.core.exactalg import MultiLaurent, UniPoly
from zetaform.core.forms import (
    PartialForm,
    Symmetry,
    ZetaIntegrand,
    ball_rivoal_form,
    ball_rivoal_special,
    derivative_form,
    eulerian_form,
    eulerian_primitive,
    is_integrable,
    partial_integrate,
    reduce_dimension,
    restrict,
    same_function,
    tau_form,
    tau_symmetry,
)
from zetaform.core.zeta_coeffs import coefficients

from .conftest import GOLDEN, laurent_polys


def x(n, i):
    return MultiLaurent.variable(n, i - 1)


def one(n):
    return MultiLaurent.constant(n, 1)


def prod_all(n):
    return MultiLaurent.product_monomial(n)


def test_integrand_validation():
    with pytest.raises(ValueError):
        ZetaIntegrand(0, MultiLaurent.zero(0), 1)
    with pytest.raises(ValueError):
        ZetaIntegrand(2, one(3), 1)
    with pytest.raises(ValueError):
        ZetaIntegrand(2, one(2), -1)
    with pytest.raises(ValueError):
        PartialForm(2, 3, one(2), 1)


def test_integrand_printing():
    assert str(ZetaIntegrand(2, x(2, 1), 3)) == "(x1)/(1-x1*x2)^3"


@pytest.mark.parametrize(
    "form, expected",
    [
        (ZetaIntegrand(2, one(2), 1), True),
        (ZetaIntegrand(2, one(2), 2), False),
        (ball_rivoal_form((2, 2), (2, 2), 2), True),
        (ZetaIntegrand(3, MultiLaurent.zero(3), 9), True),
        (ZetaIntegrand(1, one(1), 1), False),
        (ZetaIntegrand(1, one(1) - x(1, 1), 1), True),
    ],
)
def test_is_integrable(form, expected):
    assert is_integrable(form) is expected


def test_is_integrable_rejects_laurent():
    with pytest.raises(NotPolynomial):
        is_integrable(ZetaIntegrand(1, MultiLaurent(1, {(-1,): 1}), 1))


def test_tau_form_examples():
    assert tau_form(ZetaIntegrand(2, one(2), 1)) == ZetaIntegrand(2, MultiLaurent(2, {(-1, -1): -1}), 1)
    assert tau_form(ZetaIntegrand(3, one(3), 2)) == ZetaIntegrand(3, -one(3), 2)


@settings(max_examples=500)
@given(st.data())
def test_tau_is_an_involution(data):
    n = data.draw(st.integers(1, 4))
    P = data.draw(laurent_polys(n, min_degree=-3, max_degree=4))
    N = data.draw(st.integers(0, 6))
    form = ZetaIntegrand(n, P, N)
    assert tau_form(tau_form(form)) == form


@given(st.data())
def test_tau_symmetry_matches_tau_form(data):
    n = data.draw(st.integers(1, 3))
    P = data.draw(laurent_polys(n, max_degree=3))
    N = data.draw(st.integers(0, 5))
    form = ZetaIntegrand(n, P, N)
    image = tau_form(form).numerator
    symmetry = tau_symmetry(form)
    assert (symmetry is Symmetry.PLUS) == (image == P)
    if symmetry is Symmetry.MINUS:
        assert image == -P


def test_tau_symmetry_examples():
    assert tau_symmetry(ZetaIntegrand(3, one(3), 2)) is Symmetry.MINUS
    assert tau_symmetry(ZetaIntegrand(2, one(2), 1)) is Symmetry.NONE
    assert tau_symmetry(ZetaIntegrand(2, MultiLaurent.zero(2), 4)) is Symmetry.PLUS


def test_tau_symmetrized_form_is_symmetric():
    form = ball_rivoal_form((1, 2), (2, 1), 4)
    image = tau_form(form)
    symmetric = ZetaIntegrand(2, form.numerator + image.numerator, 4)
    assert tau_symmetry(symmetric) is Symmetry.PLUS


@pytest.mark.parametrize(
    "n, k, numerator, N",
    [
        (2, 2, lambda: one(2), 1),
        (3, 2, lambda: one(3), 2),
        (4, 2, lambda: one(4) + prod_all(4), 3),
    ],
)
def test_eulerian_form_examples(n, k, numerator, N):
    assert eulerian_form(n, k) == ZetaIntegrand(n, numerator(), N)


def test_eulerian_form_zero_index_is_the_cube():
    assert eulerian_form(3, 0) == ZetaIntegrand(3, one(3), 0)
    with pytest.raises(ValueError):
        eulerian_form(3, 1)
    with pytest.raises(ValueError):
        eulerian_form(1, 1)


@pytest.mark.parametrize("n", range(2, 9))
def test_eulerian_forms_are_integrable(n):
    assert eulerian_form(n, n) == ZetaIntegrand(n, one(n), 1)
    for k in range(2, n + 1):
        assert is_integrable(eulerian_form(n, k))


@pytest.mark.parametrize("n", range(2, 9))
def test_eulerian_primitives_differentiate_to_eulerian_forms(n):
    sign = (-1) ** (n - 1)
    for k in [0] + list(range(2, n)):
        d = derivative_form(eulerian_primitive(n, k))
        target = eulerian_form(n, k)
        assert ZetaIntegrand(n, d.numerator.scale(sign), d.pole_order) == target


def test_ball_rivoal_form_examples():
    assert ball_rivoal_form((1, 1), (1, 1), 1) == ZetaIntegrand(2, one(2), 1)
    expected = x(2, 1) * x(2, 2) * (one(2) - x(2, 1)) * (one(2) - x(2, 2))
    assert ball_rivoal_form((2, 2), (2, 2), 2) == ZetaIntegrand(2, expected, 2)
    assert ball_rivoal_form((1, 1, 1), (1, 1, 1), 2) == ZetaIntegrand(3, one(3), 2)


@pytest.mark.parametrize("u, v, N", [((1,), (1, 1), 2), ((), (), 1), ((0,), (1,), 1), ((1,), (1,), -1)])
def test_ball_rivoal_form_validation(u, v, N):
    with pytest.raises(ValueError):
        ball_rivoal_form(u, v, N)


def test_ball_rivoal_special():
    assert ball_rivoal_special(5, 1, 1) == ((2,) * 5, (2,) * 5, 5)
    u, v, N = ball_rivoal_special(9, 2, 1)
    assert (u[0], v[0], N) == (3, 2, 7)
    assert all(2 * a + b == N + 1 for a, b in zip(u, v))
    with pytest.raises(ValueError):
        ball_rivoal_special(2, 1, 1)


def test_derivative_form_examples():
    eta = PartialForm(2, 2, x(2, 2), 0)
    assert derivative_form(eta) == ZetaIntegrand(2, -one(2), 0)
    eta = PartialForm(2, 2, x(2, 2), 1)
    assert derivative_form(eta) == ZetaIntegrand(2, -one(2), 2)


def test_restrict_examples():
    eta = PartialForm(2, 2, x(2, 2), 1)
    assert restrict(eta, 1) == ZetaIntegrand(1, one(1), 1)
    assert restrict(eta, 0) == ZetaIntegrand(1, MultiLaurent.zero(1), 0)
    eta = PartialForm(3, 1, x(3, 1) * x(3, 2), 2)
    assert restrict(eta, 1) == ZetaIntegrand(2, x(2, 1), 2)
    with pytest.raises(ValueError):
        restrict(eta, 2)
    with pytest.raises(ValueError):
        restrict(PartialForm(1, 1, one(1), 1), 1)


def test_same_function():
    base = ZetaIntegrand(2, one(2), 1)
    raised = ZetaIntegrand(2, one(2) - prod_all(2), 2)
    assert same_function(base, raised)
    assert same_function(raised, base)
    assert not same_function(base, ZetaIntegrand(2, one(2), 2))
    assert not same_function(base, ZetaIntegrand(3, one(3), 1))


@pytest.mark.parametrize(
    "u, v, N, expected",
    [
        (1, 1, 2, UniPoly.constant(1)),
        (1, 1, 3, UniPoly((1, Fraction(-1, 2)))),
        (1, 2, 3, UniPoly.constant(Fraction(1, 2))),
    ],
)
def test_partial_integrate_examples(u, v, N, expected):
    assert partial_integrate(u, v, N) == expected


def test_partial_integrate_needs_small_exponents():
    with pytest.raises(LemmaInapplicable):
        partial_integrate(2, 2, 3)
    with pytest.raises(ValueError):
        partial_integrate(0, 1, 3)


@pytest.mark.parametrize("u, v, N", [(1, 1, 2), (2, 1, 4), (2, 3, 5), (3, 2, 6), (1, 4, 6)])
def test_partial_integrate_matches_expansion(u, v, N):
    # t^k coefficient of the integral is binom(k+N-1, N-1) * B(u+k, v)
    def beta_integral(a, b):
        return Fraction(factorial(a - 1) * factorial(b - 1), factorial(a + b - 1))

    P = partial_integrate(u, v, N)
    m = N - v
    for k in range(6):
        lhs = comb(k + N - 1, N - 1) * beta_integral(u + k, v)
        rhs = sum(P.coefficient(i) * comb(k - i + m - 1, m - 1) for i in range(k + 1))
        assert lhs == rhs


def test_reduce_dimension_examples():
    reduced = reduce_dimension(ZetaIntegrand(2, one(2), 2), 2)
    assert reduced == ZetaIntegrand(1, one(1), 1)
    reduced = reduce_dimension(ZetaIntegrand(3, one(3), 2), 3)
    assert reduced == ZetaIntegrand(2, one(2), 1)
    with pytest.raises(NotFactorable):
        reduce_dimension(ZetaIntegrand(2, x(2, 1) + x(2, 2), 3), 1)
    with pytest.raises(LemmaInapplicable):
        reduce_dimension(ball_rivoal_form((2, 2), (2, 2), 2), 1)


def test_reduce_dimension_zero_form():
    assert reduce_dimension(ZetaIntegrand(3, MultiLaurent.zero(3), 4), 2) == ZetaIntegrand(2, MultiLaurent.zero(2), 3)


def _reducible(form):
    for i in range(1, form.n + 1):
        try:
            return reduce_dimension(form, i)
        except (LemmaInapplicable, NotFactorable):
            continue
    return None


@pytest.mark.parametrize("label, form", [(label, f) for label, f in GOLDEN if f.n >= 2], ids=[label for label, f in GOLDEN if f.n >= 2])
def test_reduce_dimension_preserves_the_value(label, form):
    reduced = _reducible(form)
    if reduced is None:
        pytest.skip(f"{label}: no variable satisfies u + v <= N")
    before = coefficients(form)
    after = coefficients(reduced)
    assert before[form.n] == 0
    assert after.a0 == before.a0
    for r in range(2, form.n):
        assert after[r] == before[r]
