"""From forms to exact linear forms a0 + a2 zeta(2) + ... + an zeta(n)."""
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Dict, FrozenSet, Sequence, Tuple

from zetaform.core.errors import InternalInconsistency, NotIntegrable, NotPolynomial
from zetaform.core.exactalg import UniPoly, bernoulli, binomial_poly, format_rational
from zetaform.core.forms import Symmetry, ZetaIntegrand, is_integrable, tau_symmetry
from zetaform.core.graded import GradedScalar
from zetaform.core.series_space import VElement, beta, constant_term_R0, partial_fractions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZetaCoefficients:
    """a0 + sum_r a[r] zeta(r); absent keys are zero."""

    n: int
    a0: Fraction
    a: Dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for r, value in self.a.items():
            if not 2 <= r <= self.n:
                raise ValueError(f"zeta index {r} outside 2..{self.n}")
            value = Fraction(value)
            if value:
                clean[r] = value
        object.__setattr__(self, "a0", Fraction(self.a0))
        object.__setattr__(self, "a", clean)

    def __getitem__(self, r: int) -> Fraction:
        if r == 0:
            return self.a0
        return self.a.get(r, Fraction(0))

    def __hash__(self) -> int:
        return hash((self.n, self.a0, frozenset(self.a.items())))

    def vanishing(self) -> FrozenSet[int]:
        return frozenset(r for r in range(2, self.n + 1) if not self.a.get(r))

    def __str__(self) -> str:
        lines = [f"a0 = {format_rational(self.a0)}"]
        lines += [f"a{r} = {format_rational(self[r])}" for r in range(2, self.n + 1)]
        return "\n".join(lines)


@lru_cache(maxsize=4096)
def _phi_monomial(N: int, shifts: Tuple[int, ...]) -> VElement:
    return partial_fractions(binomial_poly(N), Counter(shifts))


def phi(form: ZetaIntegrand) -> VElement:
    """Monomial x^(a-1)/(1-prod)^N maps to binom(k+N-1, N-1)/prod_i (k+a_i); N = 0 maps to 0.

    The specific representative is returned, not just its class modulo Delta.
    """
    P = form.numerator
    if not P.is_polynomial():
        raise NotPolynomial(f"phi needs a polynomial numerator, got {P}")
    N = form.pole_order
    if N == 0 or P.is_zero():
        return VElement()
    grouped: Dict[Tuple[int, ...], Fraction] = {}
    for exps, c in P.items():
        key = tuple(sorted(e + 1 for e in exps))
        grouped[key] = grouped.get(key, Fraction(0)) + c
    poly = UniPoly()
    poles: Dict[Tuple[int, int], Fraction] = {}
    for key, c in grouped.items():
        if not c:
            continue
        image = _phi_monomial(N, key)
        poly = poly + image.poly_part * c
        for pole, value in image.pole_coeffs.items():
            poles[pole] = poles.get(pole, Fraction(0)) + c * value
    logger.debug("phi: %d monomials in %d classes -> %d pole terms", len(P), len(grouped), len(poles))
    return VElement(poly, poles)


def _integrate_monomials(form: ZetaIntegrand) -> Fraction:
    return sum(
        (c / prod(e + 1 for e in exps) for exps, c in form.numerator.items()),
        Fraction(0),
    )


def coefficients(form: ZetaIntegrand) -> ZetaCoefficients:
    """Exact a0, a2..an with the integral over [0,1]^n equal to a0 + sum a_r zeta(r)."""
    if not is_integrable(form):
        raise NotIntegrable(f"{form} does not converge absolutely on the unit cube")
    if form.pole_order == 0:
        return ZetaCoefficients(form.n, _integrate_monomials(form))
    R = phi(form)
    if not R.poly_part.is_zero():
        raise InternalInconsistency(f"phi of an integrable form has polynomial part {R.poly_part}")
    b = beta(R)
    if b[1]:
        raise InternalInconsistency(f"phi of an integrable form has beta_1 = {format_rational(b[1])}")
    if len(b) > form.n:
        raise InternalInconsistency(f"beta_{len(b)} is nonzero for a form in {form.n} variables")
    a0 = constant_term_R0(R)
    return ZetaCoefficients(form.n, a0, b.nonzero(start=2))


def predict_vanishing(form: ZetaIntegrand) -> FrozenSet[int]:
    """Indices forced to vanish by tau (anti)symmetry: even ones for plus, odd ones for minus."""
    symmetry = tau_symmetry(form)
    if symmetry is Symmetry.PLUS:
        return frozenset(range(2, form.n + 1, 2))
    if symmetry is Symmetry.MINUS:
        return frozenset(range(3, form.n + 1, 2))
    return frozenset()


def highest_coeff_residue(form: ZetaIntegrand) -> Fraction:
    """a_n from the residue along x_n = 1/(x1...x_{n-1}) and the constant term on the torus.

    Oriented so that the form dx1...dxn/(1 - x1...xn) gives 1.
    """
    P = form.numerator
    if not P.is_polynomial():
        raise NotPolynomial(f"residue computation needs a polynomial numerator, got {P}")
    if form.n < 2:
        raise ValueError("the residue computation needs n >= 2")
    if not is_integrable(form):
        raise NotIntegrable(f"{form} does not converge absolutely on the unit cube")
    N = form.pole_order
    if N == 0:
        return Fraction(0)
    last = form.n - 1
    D = P
    for _ in range(N - 1):
        D = D.diff(last)
    total = Fraction(0)
    for exps, c in D.items():
        target = exps[last] + N - 1
        if all(e == target for e in exps[:last]):
            total += c
    sign = 1 if N % 2 else -1
    return sign * total / factorial(N - 1)


def even_zeta_rational(k: int) -> Fraction:
    """lambda_2k with zeta(2k) = lambda_2k (2 pi i)^(2k)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return -bernoulli(2 * k) / (2 * factorial(2 * k))


def even_zeta_pi_coefficient(k: int) -> Fraction:
    """q_2k with zeta(2k) = q_2k pi^(2k)."""
    return (-1) ** k * 4 ** k * even_zeta_rational(k)


def odd_basis_decomposition(c: ZetaCoefficients) -> GradedScalar:
    t_coeffs = {0: c.a0}
    odd = {}
    for r, value in c.a.items():
        if r % 2:
            odd[r] = value
        else:
            t_coeffs[r] = value * even_zeta_rational(r // 2)
    return GradedScalar(t_coeffs, odd)


@dataclass(frozen=True)
class HypergeometricDisplay:
    upper: Tuple[int, ...]
    lower: Tuple[int, ...]
    prefactor: Fraction
    well_poised: bool

    def __str__(self) -> str:
        upper = ", ".join(map(str, self.upper))
        lower = ", ".join(map(str, self.lower))
        q = len(self.upper)
        return f"{format_rational(self.prefactor)} * {q}F{q - 1}({upper}; {lower}; 1)"


def _check_parameters(u: Sequence[int], v: Sequence[int], N: int) -> None:
    if len(u) != len(v) or not u:
        raise ValueError("u and v must be nonempty and of equal length")
    if any(a < 1 for a in u) or any(b < 1 for b in v) or N < 0:
        raise ValueError("parameters must satisfy u_i, v_i >= 1 and N >= 0")


def hypergeometric_params(u: Sequence[int], v: Sequence[int], N: int) -> HypergeometricDisplay:
    _check_parameters(u, v, N)
    prefactor = Fraction(1)
    for a, b in zip(u, v):
        prefactor *= Fraction(factorial(a - 1) * factorial(b - 1), factorial(a + b - 1))
    return HypergeometricDisplay(
        upper=tuple(u) + (N,),
        lower=tuple(a + b for a, b in zip(u, v)),
        prefactor=prefactor,
        well_poised=all(2 * a + b == N + 1 for a, b in zip(u, v)),
    )


def _rising(x: int, k: int) -> int:
    return prod(range(x, x + k), start=1)


def hypergeometric_term(u: Sequence[int], v: Sequence[int], N: int, k: int) -> Fraction:
    """k-th term: prefactor * prod (u_i)_k/(u_i+v_i)_k * (N)_k/k!."""
    display = hypergeometric_params(u, v, N)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    term = display.prefactor * Fraction(_rising(N, k), factorial(k))
    for a, b in zip(u, v):
        term *= Fraction(_rising(a, k), _rising(a + b, k))
    return term


def weight_drop_predicted(u: Sequence[int], v: Sequence[int], N: int) -> bool:
    return any(a + b <= N for a, b in zip(u, v))


def parity_partner(R: VElement, N: int) -> VElement:
    """S(k) = -R(-N-k); (k+j)^(-r) maps to -(-1)^r (k+N-j)^(-r)."""
    poles = {}
    for (j, r), c in R.items():
        shift = N - j
        if shift < 1:
            raise ValueError(f"shift {j} has no partner for N = {N}")
        poles[(shift, r)] = c if r % 2 else -c
    reflected = UniPoly([c if i % 2 == 0 else -c for i, c in enumerate(R.poly_part.coeffs)])
    return VElement(-reflected.shift(N), poles)
