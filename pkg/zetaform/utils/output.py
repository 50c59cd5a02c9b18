"""Machine-readable output records and their published JSON schemas."""
from typing import Dict, List, Literal, Optional, Type

from pydantic import BaseModel, Field

from zetaform.core.exactalg import format_rational
from zetaform.core.numeric import DecimalInterval, VerificationReport
from zetaform.core.zeta_coeffs import ZetaCoefficients

RationalText = str


def coefficient_strings(c: ZetaCoefficients) -> Dict[str, RationalText]:
    """
    Render a2..an as exact rational strings.

    Args:
        c: Coefficients of a linear form

    Returns:
        Mapping from the index as a string to "p/q" or "p"; zero entries included
    """
    return {str(r): format_rational(c[r]) for r in range(2, c.n + 1)}


class CoefficientsRecord(BaseModel):
    """Exact coefficients of a0 + a2 zeta(2) + ... + an zeta(n)."""

    n: int = Field(ge=1)
    a0: RationalText
    coeffs: Dict[str, RationalText]

    @classmethod
    def from_coefficients(cls, c: ZetaCoefficients) -> "CoefficientsRecord":
        return cls(n=c.n, a0=format_rational(c.a0), coeffs=coefficient_strings(c))


class IntervalRecord(BaseModel):
    midpoint: str = Field(description="decimal rendering of the midpoint")
    radius: str = Field(description="decimal rendering of the radius")
    lo: RationalText
    hi: RationalText

    @classmethod
    def from_interval(cls, interval: DecimalInterval, digits: int) -> "IntervalRecord":
        return cls(
            midpoint=interval.to_decimal_string(digits),
            radius=interval.radius_string(),
            lo=format_rational(interval.lo),
            hi=format_rational(interval.hi),
        )


class VerificationRecord(BaseModel):
    lhs: IntervalRecord
    rhs: IntervalRecord
    passed: bool
    K: int
    digits: int

    @classmethod
    def from_report(cls, report: VerificationReport) -> "VerificationRecord":
        return cls(
            lhs=IntervalRecord.from_interval(report.lhs, report.digits),
            rhs=IntervalRecord.from_interval(report.rhs, report.digits),
            passed=report.passed,
            K=report.K,
            digits=report.digits,
        )


class ScanRecord(BaseModel):
    """One Ball-Rivoal parameter tuple of a scan."""

    u: List[int]
    v: List[int]
    N: int
    n: int
    integrable: bool
    a0: Optional[RationalText] = None
    coeffs: Dict[str, RationalText] = Field(default_factory=dict)
    tau: Literal["plus", "minus", "none"]
    predicted_zeros: List[int]
    weight_drop: bool

    def key(self) -> tuple:
        return tuple(self.u), tuple(self.v), self.N


SCHEMAS: Dict[str, Type[BaseModel]] = {
    "coeffs": CoefficientsRecord,
    "scan": ScanRecord,
    "check": VerificationRecord,
}
