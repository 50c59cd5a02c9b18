"""Differential forms P/(1 - x1*...*xn)^N dx1...dxn and their calculus."""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple

from zetaform.core.errors import (
    InternalInconsistency,
    LemmaInapplicable,
    NotFactorable,
    NotPolynomial,
)
from zetaform.core.exactalg import (
    MultiLaurent,
    UniPoly,
    invert_substitute,
    product_of_univariates,
    substitute_one_minus,
)
from zetaform.core.periods import eulerian_poly

logger = logging.getLogger(__name__)


class Symmetry(str, Enum):
    PLUS = "plus"
    MINUS = "minus"
    NONE = "none"


def _denominator_text(n: int) -> str:
    return "*".join(f"x{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class ZetaIntegrand:
    """numerator / (1 - x1*...*xn)^pole_order dx1...dxn."""

    n: int
    numerator: MultiLaurent
    pole_order: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"a form needs n >= 1 variables, got {self.n}")
        if self.numerator.nvars != self.n:
            raise ValueError(f"numerator has {self.numerator.nvars} variables, form has {self.n}")
        if self.pole_order < 0:
            raise ValueError(f"pole order must be >= 0, got {self.pole_order}")

    def __str__(self) -> str:
        return f"({self.numerator})/(1-{_denominator_text(self.n)})^{self.pole_order}"


@dataclass(frozen=True)
class PartialForm:
    """numerator / (1 - x1*...*xn)^pole_order dx1...(dx_j omitted)...dxn, j 1-based."""

    n: int
    omitted_index: int
    numerator: MultiLaurent
    pole_order: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"a form needs n >= 1 variables, got {self.n}")
        if not 1 <= self.omitted_index <= self.n:
            raise ValueError(f"omitted index {self.omitted_index} outside 1..{self.n}")
        if self.numerator.nvars != self.n:
            raise ValueError(f"numerator has {self.numerator.nvars} variables, form has {self.n}")
        if self.pole_order < 0:
            raise ValueError(f"pole order must be >= 0, got {self.pole_order}")


def _one_minus_product(n: int) -> MultiLaurent:
    return MultiLaurent.constant(n, 1) - MultiLaurent.product_monomial(n)


def is_integrable(form: ZetaIntegrand) -> bool:
    """Absolute convergence over the unit cube.

    After x_i -> 1 - y_i the numerator must vanish to order >= N + 1 - n at y = 0.
    """
    P = form.numerator
    if not P.is_polynomial():
        raise NotPolynomial(f"integrability is only defined for polynomial numerators, got {P}")
    needed = form.pole_order + 1 - form.n
    if P.is_zero() or needed <= 0:
        return True
    low = substitute_one_minus(P, below_degree=needed)
    return low.is_zero()


def tau_form(form: ZetaIntegrand) -> ZetaIntegrand:
    """Pullback under x_i -> 1/x_i."""
    sign = -1 if (form.pole_order + form.n) % 2 else 1
    image = invert_substitute(form.numerator, form.pole_order - 2).scale(sign)
    return ZetaIntegrand(form.n, image, form.pole_order)


def tau_symmetry(form: ZetaIntegrand) -> Symmetry:
    image = tau_form(form).numerator
    if image == form.numerator:
        return Symmetry.PLUS
    if image == -form.numerator:
        return Symmetry.MINUS
    return Symmetry.NONE


def eulerian_form(n: int, k: int) -> ZetaIntegrand:
    """E_{n-k}(x1*...*xn)/(1 - x1*...*xn)^{n-k+1}; k = 0 gives dx1...dxn."""
    if n < 2:
        raise ValueError(f"eulerian_form needs n >= 2, got {n}")
    if k == 0:
        return ZetaIntegrand(n, MultiLaurent.constant(n, 1), 0)
    if not 2 <= k <= n:
        raise ValueError(f"eulerian_form needs k = 0 or 2 <= k <= n, got k={k}, n={n}")
    numerator = MultiLaurent.from_univariate_in_product(eulerian_poly(n - k), n)
    return ZetaIntegrand(n, numerator, n - k + 1)


def eulerian_primitive(n: int, k: int) -> PartialForm:
    """The (n-1)-form x_n E_{n-1-k}(x1*...*xn)/(1 - x1*...*xn)^{n-k} whose derivative is +-omega_k."""
    if n < 2:
        raise ValueError(f"eulerian_primitive needs n >= 2, got {n}")
    xn = MultiLaurent.variable(n, n - 1)
    if k == 0:
        return PartialForm(n, n, xn, 0)
    if not 2 <= k <= n - 1:
        raise ValueError(f"eulerian_primitive needs k = 0 or 2 <= k <= n-1, got k={k}, n={n}")
    numerator = xn * MultiLaurent.from_univariate_in_product(eulerian_poly(n - 1 - k), n)
    return PartialForm(n, n, numerator, n - k)


def ball_rivoal_form(u: Sequence[int], v: Sequence[int], N: int) -> ZetaIntegrand:
    """prod_i x_i^(u_i-1) (1-x_i)^(v_i-1) / (1 - x1*...*xn)^N."""
    if len(u) != len(v):
        raise ValueError(f"u and v must have equal length, got {len(u)} and {len(v)}")
    if not u:
        raise ValueError("u and v must be nonempty")
    if any(a < 1 for a in u) or any(b < 1 for b in v):
        raise ValueError("entries of u and v must be >= 1")
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    factors = [UniPoly.monomial(a - 1) * UniPoly((1, -1)) ** (b - 1) for a, b in zip(u, v)]
    return ZetaIntegrand(len(u), product_of_univariates(factors), N)


def ball_rivoal_special(n: int, r: int, m: int) -> Tuple[Tuple[int, ...], Tuple[int, ...], int]:
    """Well-poised parameters N = (2r+1)m + 2, u_i = rm + 1, v_i = m + 1."""
    if n < 1 or r < 1 or m < 0:
        raise ValueError(f"need n >= 1, r >= 1, m >= 0, got n={n}, r={r}, m={m}")
    N = (2 * r + 1) * m + 2
    if n * (m + 1) < N + 1:
        raise ValueError(f"n(m+1) = {n * (m + 1)} < (2r+1)m+3 = {N + 1}: the integral diverges")
    return (r * m + 1,) * n, (m + 1,) * n, N


def derivative_form(pf: PartialForm) -> ZetaIntegrand:
    """d(eta) as G/(1 - x1*...*xn)^(N+1) dx1...dxn, wedge sign included."""
    n, j, P, N = pf.n, pf.omitted_index, pf.numerator, pf.pole_order
    idx = j - 1
    sign = -1 if idx % 2 else 1
    dP = P.diff(idx)
    if N == 0:
        return ZetaIntegrand(n, dP.scale(sign), 0)
    others = [1] * n
    others[idx] = 0
    G = _one_minus_product(n) * dP + P.times_monomial(others, N)
    return ZetaIntegrand(n, G.scale(sign), N + 1)


def restrict(pf: PartialForm, value: int) -> ZetaIntegrand:
    """Set x_j = value (0 or 1) and reindex the remaining variables."""
    if value not in (0, 1):
        raise ValueError(f"restriction value must be 0 or 1, got {value}")
    if pf.n < 2:
        raise ValueError("restricting a form in one variable leaves no variables")
    idx = pf.omitted_index - 1
    numerator = pf.numerator.substitute(idx, value).drop_variable(idx)
    return ZetaIntegrand(pf.n - 1, numerator, pf.pole_order if value == 1 else 0)


def same_function(a: ZetaIntegrand, b: ZetaIntegrand) -> bool:
    """Equality of P_a/(1-prod)^N_a and P_b/(1-prod)^N_b as rational functions."""
    if a.n != b.n:
        return False
    base = _one_minus_product(a.n)
    if a.pole_order <= b.pole_order:
        return a.numerator * base ** (b.pole_order - a.pole_order) == b.numerator
    return b.numerator * base ** (a.pole_order - b.pole_order) == a.numerator


def _lift_to_t(u: int, v: int) -> List[UniPoly]:
    """Coefficients in s of (1-s)^(u-1) (s+t-1)^(v-1), each a polynomial in t."""
    left = [UniPoly.constant((-1) ** i * comb(u - 1, i)) for i in range(u)]
    t_minus_one = UniPoly((-1, 1))
    right = [t_minus_one ** (v - 1 - i) * comb(v - 1, i) for i in range(v)]
    out = [UniPoly() for _ in range(u + v - 1)]
    for i, a in enumerate(left):
        for k, b in enumerate(right):
            out[i + k] = out[i + k] + a * b
    return out


def partial_integrate(u: int, v: int, N: int) -> UniPoly:
    """P(t) with int_0^1 x^(u-1)(1-x)^(v-1)/(1-tx)^N dx = P(t)/(1-t)^(N-v).

    Substituting s = 1 - tx turns the integrand into a Laurent polynomial in s;
    the termwise integral is put over t^(u+v-1)(1-t)^(N-1) and the quotient is
    checked to be exact.
    """
    if u < 1 or v < 1:
        raise ValueError(f"u and v must be >= 1, got u={u}, v={v}")
    if u + v > N:
        raise LemmaInapplicable(f"u + v = {u + v} exceeds N = {N}")
    one_minus_t = UniPoly((1, -1))
    total = UniPoly()
    for k, a_k in enumerate(_lift_to_t(u, v)):
        if a_k.is_zero():
            continue
        m = N - k - 1
        piece = (1 - one_minus_t ** m) * one_minus_t ** (N - 1 - m) * Fraction(1, m)
        total = total + a_k * piece
    denominator = UniPoly.monomial(u + v - 1) * one_minus_t ** (v - 1)
    quotient, remainder = total.divmod(denominator)
    if not remainder.is_zero():
        raise InternalInconsistency(f"partial_integrate({u}, {v}, {N}) left remainder {remainder}")
    return quotient


def _factor_in_variable(P: MultiLaurent, idx: int) -> Tuple[int, int, MultiLaurent]:
    """Write P = x^(u-1) (1-x)^(v-1) Q(others) with x = x_{idx+1}; returns (u, v, Q)."""
    groups: Dict[Tuple[int, ...], Dict[int, Fraction]] = {}
    for exps, c in P.items():
        rest = exps[:idx] + (0,) + exps[idx + 1:]
        groups.setdefault(rest, {})[exps[idx]] = c
    polys = {rest: UniPoly([g.get(p, 0) for p in range(max(g) + 1)]) for rest, g in groups.items()}
    keys = sorted(polys)
    f = polys[keys[0]]
    Q_terms = {}
    for rest in keys:
        ratio = polys[rest].leading / f.leading
        if polys[rest] != f * ratio:
            raise NotFactorable(f"{P} is not a product of a polynomial in x{idx + 1} and the other variables")
        Q_terms[rest] = ratio
    low = next(p for p, c in enumerate(f.coeffs) if c)
    f = UniPoly(f.coeffs[low:])
    one_minus_x = UniPoly((1, -1))
    mult = 0
    while f.degree > 0:
        quotient, remainder = f.divmod(one_minus_x)
        if not remainder.is_zero():
            break
        f = quotient
        mult += 1
    if f.degree != 0:
        raise NotFactorable(f"the x{idx + 1} factor of {P} is not of the form x^a (1-x)^b")
    Q = MultiLaurent(P.nvars, Q_terms).scale(f.leading)
    return low + 1, mult + 1, Q


def reduce_dimension(form: ZetaIntegrand, i: int) -> ZetaIntegrand:
    """Integrate out x_i (1-based) when u_i + v_i <= N; the result has n-1 variables."""
    if form.n < 2:
        raise ValueError("reduce_dimension needs n >= 2")
    if not 1 <= i <= form.n:
        raise ValueError(f"variable index {i} outside 1..{form.n}")
    P = form.numerator
    if not P.is_polynomial():
        raise NotPolynomial(f"reduce_dimension needs a polynomial numerator, got {P}")
    idx = i - 1
    if P.is_zero():
        return ZetaIntegrand(form.n - 1, MultiLaurent.zero(form.n - 1), max(form.pole_order - 1, 0))
    u, v, Q = _factor_in_variable(P, idx)
    N = form.pole_order
    if u + v > N:
        raise LemmaInapplicable(f"x{i} has u + v = {u + v} > N = {N}")
    lifted = partial_integrate(u, v, N)
    rest = Q.drop_variable(idx)
    numerator = rest * MultiLaurent.from_univariate_in_product(lifted, form.n - 1)
    logger.debug("reduced x%d with u=%d v=%d: pole order %d -> %d", i, u, v, N, N - v)
    return ZetaIntegrand(form.n - 1, numerator, N - v)
