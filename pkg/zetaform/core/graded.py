"""Scalars graded by powers of T (a formal symbol for 2*pi*i) with odd zeta terms."""
from fractions import Fraction
from typing import Dict, Mapping, Optional

from zetaform.core.exactalg import Scalar, format_rational


def _clean(values: Optional[Mapping[int, Scalar]]) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    for key, value in (values or {}).items():
        value = Fraction(value)
        if value:
            out[int(key)] = value
    return out


class GradedScalar:
    """sum_m q_m T^m + sum_{r odd} z_r zeta(r)."""

    __slots__ = ("t_coeffs", "odd_zeta")

    def __init__(
        self,
        t_coeffs: Optional[Mapping[int, Scalar]] = None,
        odd_zeta: Optional[Mapping[int, Scalar]] = None,
    ):
        self.t_coeffs = _clean(t_coeffs)
        self.odd_zeta = _clean(odd_zeta)
        if any(m < 0 for m in self.t_coeffs):
            raise ValueError("powers of T must be nonnegative")
        if any(r < 3 or r % 2 == 0 for r in self.odd_zeta):
            raise ValueError("zeta terms must have odd argument >= 3")

    @classmethod
    def t_power(cls, m: int, value: Scalar = 1) -> "GradedScalar":
        return cls({m: value})

    @classmethod
    def rational(cls, value: Scalar) -> "GradedScalar":
        return cls({0: value})

    @property
    def rational_part(self) -> Fraction:
        return self.t_coeffs.get(0, Fraction(0))

    def is_zero(self) -> bool:
        return not self.t_coeffs and not self.odd_zeta

    def is_pure_t(self) -> bool:
        return not self.odd_zeta

    def __add__(self, other: "GradedScalar") -> "GradedScalar":
        t = dict(self.t_coeffs)
        for m, q in other.t_coeffs.items():
            t[m] = t.get(m, Fraction(0)) + q
        z = dict(self.odd_zeta)
        for r, q in other.odd_zeta.items():
            z[r] = z.get(r, Fraction(0)) + q
        return GradedScalar(t, z)

    def __neg__(self) -> "GradedScalar":
        return self.scale(-1)

    def __sub__(self, other: "GradedScalar") -> "GradedScalar":
        return self + (-other)

    def scale(self, value: Scalar) -> "GradedScalar":
        value = Fraction(value)
        return GradedScalar(
            {m: q * value for m, q in self.t_coeffs.items()},
            {r: q * value for r, q in self.odd_zeta.items()},
        )

    def __mul__(self, other: "GradedScalar") -> "GradedScalar":
        # products of zeta values leave the graded ring we track
        if not (self.is_pure_t() and other.is_pure_t()):
            raise ValueError("only polynomials in T can be multiplied")
        t: Dict[int, Fraction] = {}
        for m1, q1 in self.t_coeffs.items():
            for m2, q2 in other.t_coeffs.items():
                t[m1 + m2] = t.get(m1 + m2, Fraction(0)) + q1 * q2
        return GradedScalar(t)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedScalar):
            return NotImplemented
        return self.t_coeffs == other.t_coeffs and self.odd_zeta == other.odd_zeta

    def __hash__(self) -> int:
        return hash((frozenset(self.t_coeffs.items()), frozenset(self.odd_zeta.items())))

    def __str__(self) -> str:
        pieces = []
        for m in sorted(self.t_coeffs):
            q = self.t_coeffs[m]
            if m == 0:
                pieces.append(format_rational(q))
            else:
                symbol = "T" if m == 1 else f"T^{m}"
                pieces.append(symbol if q == 1 else f"{format_rational(q)}*{symbol}")
        for r in sorted(self.odd_zeta):
            q = self.odd_zeta[r]
            pieces.append(f"zeta({r})" if q == 1 else f"{format_rational(q)}*zeta({r})")
        return " + ".join(pieces) if pieces else "0"

    def __repr__(self) -> str:
        return f"GradedScalar({self})"
