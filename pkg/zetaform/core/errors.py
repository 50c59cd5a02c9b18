"""Exception hierarchy for zetaform."""
from typing import Optional


class ZetaformError(Exception):
    """Base class for every error raised by the engine."""


class NotPolynomial(ZetaformError):
    """A numerator carries negative exponents where a polynomial is required."""


class NotIntegrable(ZetaformError):
    """The form fails the integrability criterion."""


class NotSummable(ZetaformError):
    """A series element has a polynomial part or a nonzero beta_1."""


class NotFactorable(ZetaformError):
    """A numerator does not split as x^(u-1)(1-x)^(v-1) times the other variables."""


class LemmaInapplicable(ZetaformError):
    """Partial integration requested with u + v > N."""


class InternalInconsistency(ZetaformError):
    """An identity that always holds for a correct implementation was violated."""


class EnumerationBound(ZetaformError):
    """An exhaustive enumeration was requested beyond its size bound."""


class ParseError(ZetaformError):
    """Syntax error in a form expression, with a 1-based position."""

    def __init__(self, message: str, line: int = 1, column: int = 1, source: Optional[str] = None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(f"{message} (line {line}, column {column})")


class DenominatorShape(ParseError):
    """The denominator is not (1 - x1*...*xn)^N over the full product."""
