"""The space V of rational functions in k with poles in {-1, -2, ...}.

Elements are kept as a polynomial part plus coefficients c[j, r] of (k+j)^(-r).
Two elements are equal modulo forward differences exactly when their beta
vectors agree, so no normal form for cosets is stored.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple

from zetaform.core.errors import NotSummable
from zetaform.core.exactalg import Scalar, UniPoly, format_rational, harmonic

logger = logging.getLogger(__name__)

Pole = Tuple[int, int]


class VElement:
    """poly_part(k) + sum over (j, r) of c[j, r] * (k+j)^(-r), all shifts j >= 1."""

    __slots__ = ("poly_part", "_poles")

    def __init__(
        self,
        poly_part: Optional[UniPoly] = None,
        pole_coeffs: Optional[Mapping[Pole, Scalar]] = None,
    ):
        self.poly_part = poly_part if poly_part is not None else UniPoly()
        poles: Dict[Pole, Fraction] = {}
        for (j, r), c in (pole_coeffs or {}).items():
            if j < 1:
                raise ValueError(f"pole shift must be >= 1, got {j}")
            if r < 1:
                raise ValueError(f"pole order must be >= 1, got {r}")
            value = poles.get((j, r), Fraction(0)) + Fraction(c)
            if value:
                poles[(j, r)] = value
            else:
                poles.pop((j, r), None)
        self._poles = poles

    @classmethod
    def _wrap(cls, poly_part: UniPoly, poles: Dict[Pole, Fraction]) -> "VElement":
        obj = cls.__new__(cls)
        obj.poly_part = poly_part
        obj._poles = poles
        return obj

    @property
    def pole_coeffs(self) -> Dict[Pole, Fraction]:
        return dict(self._poles)

    def items(self) -> Iterator[Tuple[Pole, Fraction]]:
        for key in sorted(self._poles):
            yield key, self._poles[key]

    def coefficient(self, j: int, r: int) -> Fraction:
        return self._poles.get((j, r), Fraction(0))

    def is_zero(self) -> bool:
        return self.poly_part.is_zero() and not self._poles

    @property
    def max_order(self) -> int:
        return max((r for _, r in self._poles), default=0)

    def __add__(self, other: "VElement") -> "VElement":
        poles = dict(self._poles)
        for key, c in other._poles.items():
            value = poles.get(key, Fraction(0)) + c
            if value:
                poles[key] = value
            else:
                poles.pop(key, None)
        return VElement._wrap(self.poly_part + other.poly_part, poles)

    def __neg__(self) -> "VElement":
        return VElement._wrap(-self.poly_part, {k: -c for k, c in self._poles.items()})

    def __sub__(self, other: "VElement") -> "VElement":
        return self + (-other)

    def scale(self, value: Scalar) -> "VElement":
        value = Fraction(value)
        if not value:
            return VElement()
        return VElement._wrap(self.poly_part * value, {k: c * value for k, c in self._poles.items()})

    def evaluate(self, k: Scalar) -> Fraction:
        """Exact value at a rational point that is not a pole."""
        k = Fraction(k)
        total = self.poly_part(k)
        for (j, r), c in self._poles.items():
            base = k + j
            if base == 0:
                raise ZeroDivisionError(f"k = {k} is a pole of order {r}")
            total += c / base ** r
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VElement):
            return NotImplemented
        return self.poly_part == other.poly_part and self._poles == other._poles

    def __hash__(self) -> int:
        return hash((self.poly_part, frozenset(self._poles.items())))

    def __str__(self) -> str:
        parts = []
        if not self.poly_part.is_zero():
            parts.append(f"({self.poly_part.to_str()})")
        for (j, r), c in self.items():
            power = "" if r == 1 else f"^{r}"
            parts.append(f"{format_rational(c)}/(k+{j}){power}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"VElement({self})"


@dataclass(frozen=True)
class BetaVector:
    """(beta_1, beta_2, ...) with trailing zeros trimmed."""

    entries: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        values = [Fraction(e) for e in self.entries]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "entries", tuple(values))

    def __getitem__(self, r: int) -> Fraction:
        if 1 <= r <= len(self.entries):
            return self.entries[r - 1]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.entries)

    def nonzero(self, start: int = 1) -> Dict[int, Fraction]:
        return {r: b for r, b in enumerate(self.entries, start=1) if r >= start and b}


def partial_fractions(numerator: UniPoly, poles: Mapping[int, int]) -> VElement:
    """Decompose numerator(k) / prod_j (k+j)^m_j.

    The polynomial part is the Euclidean quotient; each pole's principal part
    comes from the Taylor expansion of remainder/(other factors) at k = -j.
    """
    for j, m in poles.items():
        if j < 1:
            raise ValueError(f"pole shift must be >= 1, got {j}")
        if m < 1:
            raise ValueError(f"pole multiplicity must be >= 1, got {m}")
    denominator = UniPoly.constant(1)
    for j, m in poles.items():
        denominator = denominator * UniPoly.linear(j) ** m
    quotient, remainder = numerator.divmod(denominator)

    coeffs: Dict[Pole, Fraction] = {}
    for j, m in poles.items():
        others = UniPoly.constant(1)
        for i, mult in poles.items():
            if i != j:
                others = others * UniPoly.linear(i) ** mult
        top = remainder.shift(-j)
        bottom = others.shift(-j)
        lead = bottom.coefficient(0)
        series = []
        for t in range(m):
            acc = top.coefficient(t)
            for s in range(1, t + 1):
                acc -= bottom.coefficient(s) * series[t - s]
            series.append(acc / lead)
        for t, d in enumerate(series):
            if d:
                coeffs[(j, m - t)] = d
    return VElement._wrap(quotient, coeffs)


def delta_shift(R: VElement) -> VElement:
    """Forward difference: (Delta R)(k) = R(k+1) - R(k)."""
    poles: Dict[Pole, Fraction] = {}
    for (j, r), c in R._poles.items():
        for key, value in (((j + 1, r), c), ((j, r), -c)):
            total = poles.get(key, Fraction(0)) + value
            if total:
                poles[key] = total
            else:
                poles.pop(key, None)
    return VElement._wrap(R.poly_part.shift(1) - R.poly_part, poles)


def beta(R: VElement) -> BetaVector:
    """Coordinates of R modulo Delta(V) in the basis (k+1)^(-r)."""
    sums: Dict[int, Fraction] = {}
    for (_, r), c in R._poles.items():
        sums[r] = sums.get(r, Fraction(0)) + c
    size = max(sums, default=0)
    return BetaVector(tuple(sums.get(r, Fraction(0)) for r in range(1, size + 1)))


def mod_delta_equal(R: VElement, S: VElement) -> bool:
    return beta(R) == beta(S)


def _require_summable(R: VElement, operation: str) -> None:
    if not R.poly_part.is_zero():
        raise NotSummable(f"{operation}: element has polynomial part {R.poly_part}")
    b1 = beta(R)[1]
    if b1:
        raise NotSummable(f"{operation}: beta_1 = {format_rational(b1)} is not zero")


def constant_term_R0(R: VElement) -> Fraction:
    """R0(0) for the decomposition R = sum_r beta_r (k+1)^(-r) - Delta R0."""
    _require_summable(R, "constant_term_R0")
    total = Fraction(0)
    for (j, r), c in R._poles.items():
        if j >= 2:
            total -= c * harmonic(r, j - 1)
    return total


def evaluate_sum(R: VElement) -> Tuple[Fraction, BetaVector]:
    """sum_{k>=0} R(k) = R0(0) + sum_{r>=2} beta_r zeta(r).

    The returned BetaVector has beta_1 = 0; callers read indices r >= 2.
    """
    a0 = constant_term_R0(R)
    b = beta(R)
    logger.debug("evaluate_sum: %d pole terms up to order %d", len(R._poles), R.max_order)
    return a0, b


def partial_sum(R: VElement, K: int) -> Fraction:
    """Exact sum of R(k) for k = 0 .. K-1."""
    if K < 0:
        raise ValueError(f"K must be >= 0, got {K}")
    total = Fraction(0)
    if not R.poly_part.is_zero():
        total += sum((R.poly_part(k) for k in range(K)), Fraction(0))
    for (j, r), c in R._poles.items():
        total += c * (harmonic(r, K + j - 1) - harmonic(r, j - 1))
    return total


def tail_bound(R: VElement, K: int) -> Fraction:
    """Rational B with |sum_{k>=K} R(k)| <= B.

    Order-1 terms are paired against (k+j0)^(-1), j0 the smallest shift with an
    order-1 coefficient; higher orders use the integral test.
    """
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    _require_summable(R, "tail_bound")
    bound = Fraction(0)
    simple = [j for (j, r) in R._poles if r == 1]
    j0 = min(simple, default=1)
    for (j, r), c in R._poles.items():
        if r == 1:
            bound += abs(c) * Fraction(j - j0, K)
        else:
            bound += abs(c) / ((r - 1) * Fraction(K + j - 1) ** (r - 1))
    return bound
