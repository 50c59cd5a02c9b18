"""Certified numerics: zeta values and interval checks of computed linear forms.

Intervals have exact rational endpoints, rounded outward to a dyadic grid, so
a passing check is a proof rather than a floating point coincidence.
"""
import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import mpmath

from zetaform.core.errors import NotIntegrable
from zetaform.core.exactalg import Scalar, bernoulli
from zetaform.core.forms import ZetaIntegrand, is_integrable
from zetaform.core.series_space import VElement, tail_bound
from zetaform.core.zeta_coeffs import ZetaCoefficients, coefficients, phi

logger = logging.getLogger(__name__)

DEFAULT_K = 100000
DEFAULT_DIGITS = 30
_GUARD_DIGITS = 10


def bits_for_digits(digits: int) -> int:
    return math.ceil((digits + _GUARD_DIGITS) * math.log2(10))


def _floor_to(value: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(math.floor(value * scale), scale)


def _ceil_to(value: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(math.ceil(value * scale), scale)


@dataclass(frozen=True)
class DecimalInterval:
    """Closed interval [lo, hi] with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: Scalar) -> "DecimalInterval":
        return cls(Fraction(value), Fraction(value))

    @classmethod
    def around(cls, midpoint: Scalar, radius: Scalar) -> "DecimalInterval":
        radius = Fraction(radius)
        if radius < 0:
            raise ValueError("radius must be >= 0")
        return cls(Fraction(midpoint) - radius, Fraction(midpoint) + radius)

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def radius(self) -> Fraction:
        return (self.hi - self.lo) / 2

    def rounded(self, bits: int) -> "DecimalInterval":
        """Round outward onto the grid 2^(-bits)."""
        return DecimalInterval(_floor_to(self.lo, bits), _ceil_to(self.hi, bits))

    def __add__(self, other: "DecimalInterval") -> "DecimalInterval":
        return DecimalInterval(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "DecimalInterval":
        return DecimalInterval(-self.hi, -self.lo)

    def __sub__(self, other: "DecimalInterval") -> "DecimalInterval":
        return self + (-other)

    def scale(self, value: Scalar) -> "DecimalInterval":
        value = Fraction(value)
        a, b = self.lo * value, self.hi * value
        return DecimalInterval(min(a, b), max(a, b))

    def widen(self, amount: Scalar) -> "DecimalInterval":
        amount = Fraction(amount)
        return DecimalInterval(self.lo - amount, self.hi + amount)

    def contains(self, value: Scalar) -> bool:
        return self.lo <= Fraction(value) <= self.hi

    def intersects(self, other: "DecimalInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def agrees_with_prefix(self, prefix: str) -> bool:
        """True when every point of the interval starts with the decimal prefix."""
        low = Fraction(prefix)
        decimals = len(prefix.split(".", 1)[1]) if "." in prefix else 0
        return low <= self.lo and self.hi < low + Fraction(1, 10 ** decimals)

    def to_decimal_string(self, digits: int) -> str:
        with mpmath.mp.workdps(digits + _GUARD_DIGITS):
            value = mpmath.mpf(self.midpoint.numerator) / self.midpoint.denominator
            return mpmath.nstr(value, digits)

    def radius_string(self, digits: int = 3) -> str:
        with mpmath.mp.workdps(digits + _GUARD_DIGITS):
            value = mpmath.mpf(self.radius.numerator) / self.radius.denominator
            return mpmath.nstr(value, digits)

    def __str__(self) -> str:
        return f"{self.to_decimal_string(20)} +/- {self.radius_string()}"


@dataclass(frozen=True)
class VerificationReport:
    lhs: DecimalInterval
    rhs: DecimalInterval
    passed: bool
    K: int
    digits: int


def _rising(x: int, k: int) -> int:
    return math.prod(range(x, x + k), start=1)


def _euler_maclaurin(r: int, M: int, p: int) -> Tuple[Fraction, Fraction]:
    """Approximation of zeta(r) and a bound on its error.

    Sum of k^(-r) below M, the integral and endpoint terms, and p Bernoulli
    corrections; the error is at most the first omitted correction.
    """
    total = sum((Fraction(1, k ** r) for k in range(1, M)), Fraction(0))
    total += Fraction(1, (r - 1) * M ** (r - 1)) + Fraction(1, 2 * M ** r)
    for j in range(1, p + 1):
        total += bernoulli(2 * j) / math.factorial(2 * j) * _rising(r, 2 * j - 1) / Fraction(M) ** (r + 2 * j - 1)
    error = abs(bernoulli(2 * p + 2)) / math.factorial(2 * p + 2) * _rising(r, 2 * p + 1) / Fraction(M) ** (r + 2 * p + 1)
    return total, error


@lru_cache(maxsize=256)
def zeta_numeric(r: int, digits: int) -> DecimalInterval:
    """Interval of radius <= 10^(-digits) containing zeta(r)."""
    if r < 2:
        raise ValueError(f"zeta_numeric needs r >= 2, got {r}")
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    target = Fraction(1, 10 ** digits)
    bits = bits_for_digits(digits)
    M = p = max(10, digits)
    while True:
        value, error = _euler_maclaurin(r, M, p)
        enclosure = DecimalInterval.around(value, error).rounded(bits)
        if enclosure.radius <= target:
            logger.debug("zeta(%d) to %d digits with M=%d, p=%d", r, digits, M, p)
            return enclosure
        M *= 2


class _HarmonicTables:
    """Fixed-point enclosures floor/ceil(2^bits / i^r) of H^(r)_m, summed cumulatively."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._tables: Dict[Tuple[int, int], Tuple[List[int], List[int]]] = {}

    def bounds(self, r: int, m: int, bits: int) -> Tuple[int, int]:
        with self._lock:
            low, high = self._tables.setdefault((r, bits), ([0], [0]))
            if len(low) <= m:
                scale = 1 << bits
                lo_acc, hi_acc = low[-1], high[-1]
                for i in range(len(low), m + 1):
                    q, rem = divmod(scale, i ** r)
                    lo_acc += q
                    hi_acc += q + (1 if rem else 0)
                    low.append(lo_acc)
                    high.append(hi_acc)
            return low[m], high[m]


_HARMONIC_TABLES = _HarmonicTables()


def partial_sum_enclosure(R: VElement, K: int, bits: int) -> DecimalInterval:
    """Certified enclosure of sum_{k<K} R(k)."""
    if K < 0:
        raise ValueError(f"K must be >= 0, got {K}")
    scale = Fraction(1, 1 << bits)
    lo = hi = Fraction(0)
    if not R.poly_part.is_zero():
        lo = hi = sum((R.poly_part(k) for k in range(K)), Fraction(0))
    for (j, r), c in R.items():
        top_lo, top_hi = _HARMONIC_TABLES.bounds(r, K + j - 1, bits)
        base_lo, base_hi = _HARMONIC_TABLES.bounds(r, j - 1, bits)
        d_lo, d_hi = (top_lo - base_hi) * scale, (top_hi - base_lo) * scale
        if c > 0:
            lo, hi = lo + c * d_lo, hi + c * d_hi
        else:
            lo, hi = lo + c * d_hi, hi + c * d_lo
    return DecimalInterval(lo, hi).rounded(bits)


def linear_form_enclosure(c: ZetaCoefficients, digits: int) -> DecimalInterval:
    total = DecimalInterval.point(c.a0)
    for r, value in sorted(c.a.items()):
        total = total + zeta_numeric(r, digits).scale(value)
    return total.rounded(bits_for_digits(digits))


def verify_linear_form(
    form: ZetaIntegrand,
    c: ZetaCoefficients,
    K: int = DEFAULT_K,
    digits: int = DEFAULT_DIGITS,
    bits: Optional[int] = None,
) -> VerificationReport:
    """Check the series value of the integral against a0 + sum a_r zeta(r)."""
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if not is_integrable(form):
        raise NotIntegrable(f"{form} does not converge absolutely on the unit cube")
    if form.pole_order == 0:
        exact = coefficients(form)
        return VerificationReport(
            lhs=DecimalInterval.point(exact.a0),
            rhs=linear_form_enclosure(c, digits) if c.a else DecimalInterval.point(c.a0),
            passed=exact == c,
            K=K,
            digits=digits,
        )
    bits = bits if bits is not None else bits_for_digits(digits)
    R = phi(form)
    lhs = partial_sum_enclosure(R, K, bits).widen(tail_bound(R, K)).rounded(bits)
    rhs = linear_form_enclosure(c, digits)
    passed = lhs.intersects(rhs)
    logger.debug("verify %s: lhs radius %s, rhs radius %s, pass=%s", form, lhs.radius_string(), rhs.radius_string(), passed)
    return VerificationReport(lhs=lhs, rhs=rhs, passed=passed, K=K, digits=digits)
