"""Shared fixtures: hypothesis strategies and the golden suite of forms."""
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from zetaform.core.exactalg import MultiLaurent, UniPoly
from zetaform.core.forms import PartialForm, ZetaIntegrand, ball_rivoal_form, eulerian_form
from zetaform.core.series_space import VElement

settings.register_profile("zetaform", deadline=None)
settings.load_profile("zetaform")

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=5).filter(lambda q: q != 0)


@st.composite
def laurent_polys(draw, nvars, max_degree=3, min_degree=0, max_terms=5):
    exps = st.tuples(*[st.integers(min_degree, max_degree) for _ in range(nvars)])
    terms = draw(st.dictionaries(exps, small_fractions, max_size=max_terms))
    return MultiLaurent(nvars, terms)


@st.composite
def polynomials(draw, min_vars=1, max_vars=4, max_degree=3, max_terms=5):
    n = draw(st.integers(min_vars, max_vars))
    return draw(laurent_polys(n, max_degree=max_degree, max_terms=max_terms))


@st.composite
def unipolys(draw, max_degree=4):
    return UniPoly(draw(st.lists(st.fractions(-5, 5, max_denominator=4), max_size=max_degree + 1)))


@st.composite
def velements(draw, max_shift=6, max_order=4, with_poly=True):
    poles = draw(
        st.dictionaries(
            st.tuples(st.integers(1, max_shift), st.integers(1, max_order)),
            small_fractions,
            max_size=6,
        )
    )
    poly = draw(unipolys(3)) if with_poly else UniPoly()
    return VElement(poly, poles)


@st.composite
def integrable_forms(draw, min_vars=2, max_vars=4, max_degree=2):
    """P * prod (1 - x_i)^b_i with N <= n - 1 + sum b_i, which always converges."""
    n = draw(st.integers(min_vars, max_vars))
    base = draw(laurent_polys(n, max_degree=max_degree, max_terms=3))
    if base.is_zero():
        base = MultiLaurent.constant(n, 1)
    bs = draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
    numerator = base
    for i, b in enumerate(bs):
        one_minus = MultiLaurent.constant(n, 1) - MultiLaurent.variable(n, i)
        numerator = numerator * one_minus ** b
    N = draw(st.integers(1, n - 1 + sum(bs)))
    return ZetaIntegrand(n, numerator, N)


@st.composite
def partial_forms(draw, min_vars=2, max_vars=4, max_degree=4, max_N=4):
    n = draw(st.integers(min_vars, max_vars))
    j = draw(st.integers(1, n))
    P = draw(laurent_polys(n, max_degree=max_degree, max_terms=4))
    N = draw(st.integers(0, max_N))
    return PartialForm(n, j, P, N)


def beukers_form() -> ZetaIntegrand:
    return ball_rivoal_form((2, 2), (2, 2), 2)


def golden_forms():
    """(label, form) pairs used across the suite."""
    forms = []
    for n in range(2, 6):
        forms.append((f"omega_0^({n})", eulerian_form(n, 0)))
        for k in range(2, n + 1):
            forms.append((f"omega_{k}^({n})", eulerian_form(n, k)))
    forms += [
        ("beukers", beukers_form()),
        ("x1/(1-x1*x2)", ZetaIntegrand(2, MultiLaurent.variable(2, 0), 1)),
        ("x1 dx1", ZetaIntegrand(1, MultiLaurent.variable(1, 0), 0)),
        ("br u=v=(1,1,1) N=2", ball_rivoal_form((1, 1, 1), (1, 1, 1), 2)),
        ("br u=(1,1,1) v=(2,2,2) N=2", ball_rivoal_form((1, 1, 1), (2, 2, 2), 2)),
        ("br u=v=(2,2,2) N=3", ball_rivoal_form((2, 2, 2), (2, 2, 2), 3)),
        ("br u=(1,1,1,1) v=(2,2,2,2) N=4", ball_rivoal_form((1, 1, 1, 1), (2, 2, 2, 2), 4)),
        ("br family n=5 r=1 m=1", ball_rivoal_form((2,) * 5, (2,) * 5, 5)),
    ]
    return forms


GOLDEN = golden_forms()


@pytest.fixture(params=GOLDEN, ids=[label for label, _ in GOLDEN])
def golden_form(request):
    return request.param[1]


@pytest.fixture
def beukers():
    return beukers_form()
