"""Exact rational arithmetic: sparse multivariate Laurent polynomials, univariate polynomials
and the combinatorial numbers the pipeline consumes."""
import threading
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from zetaform.core.errors import NotPolynomial

Rational = Fraction
Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


def format_rational(value: Scalar) -> str:
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class UniPoly:
    """Dense univariate polynomial with rational coefficients, index = power."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Scalar] = ()):
        values = [Fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def constant(cls, value: Scalar) -> "UniPoly":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, value: Scalar = 1) -> "UniPoly":
        return cls([0] * degree + [value])

    @classmethod
    def linear(cls, a: Scalar, b: Scalar = 1) -> "UniPoly":
        """The polynomial b*t + a."""
        return cls((a, b))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __add__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        other = _as_unipoly(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coefficient(i) + other.coefficient(i) for i in range(size)])

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        return self + (-_as_unipoly(other))

    def __rsub__(self, other: Scalar) -> "UniPoly":
        return _as_unipoly(other) - self

    def __mul__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        if not isinstance(other, UniPoly):
            scale = Fraction(other)
            return UniPoly([c * scale for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, value: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, a: Scalar) -> "UniPoly":
        """Return p(t + a)."""
        result = UniPoly()
        step = UniPoly.linear(a)
        for c in reversed(self.coeffs):
            result = result * step + c
        return result

    def divmod(self, divisor: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        """Euclidean division; returns (quotient, remainder)."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [Fraction(0)] * max(0, len(remainder) - divisor.degree)
        lead = divisor.leading
        for shift in range(len(remainder) - 1 - divisor.degree, -1, -1):
            factor = remainder[shift + divisor.degree] / lead
            if factor == 0:
                continue
            quotient[shift] = factor
            for i, c in enumerate(divisor.coeffs):
                remainder[shift + i] -= factor * c
        return UniPoly(quotient), UniPoly(remainder[: divisor.degree] if divisor.degree > 0 else ())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def to_str(self, var: str = "k") -> str:
        pieces = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            if power == 0:
                body = format_rational(abs(c))
            else:
                mono = var if power == 1 else f"{var}^{power}"
                body = mono if abs(c) == 1 else f"{format_rational(abs(c))}*{mono}"
            pieces.append((c < 0, body))
        return _join_signed(pieces)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"UniPoly({self.to_str()})"


def _as_unipoly(value: Union[UniPoly, Scalar]) -> UniPoly:
    return value if isinstance(value, UniPoly) else UniPoly.constant(value)


def _join_signed(pieces: List[Tuple[bool, str]]) -> str:
    if not pieces:
        return "0"
    negative, body = pieces[0]
    text = f"-{body}" if negative else body
    for negative, body in pieces[1:]:
        text += f" - {body}" if negative else f" + {body}"
    return text


class MultiLaurent:
    """Sparse Laurent polynomial in x1..xn with rational coefficients.

    Exponent vectors have length ``nvars`` and may be negative; zero
    coefficients are never stored. Instances are treated as immutable.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean: Dict[Exponent, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(int(e) for e in exps)
            if len(key) != nvars:
                raise ValueError(f"exponent vector {key} does not have length {nvars}")
            value = clean.get(key, Fraction(0)) + Fraction(coeff)
            if value:
                clean[key] = value
            else:
                clean.pop(key, None)
        self.nvars = nvars
        self._terms = clean

    @classmethod
    def _wrap(cls, nvars: int, terms: Dict[Exponent, Fraction]) -> "MultiLaurent":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "MultiLaurent":
        return cls._wrap(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: Scalar = 1) -> "MultiLaurent":
        value = Fraction(value)
        return cls._wrap(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], value: Scalar = 1) -> "MultiLaurent":
        return cls(nvars, {tuple(exps): value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiLaurent":
        """The variable x_{index+1} (0-based index)."""
        exps = [0] * nvars
        exps[index] = 1
        return cls._wrap(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def product_monomial(cls, nvars: int, power: int = 1) -> "MultiLaurent":
        """(x1*...*xn)^power."""
        return cls._wrap(nvars, {(power,) * nvars: Fraction(1)})

    @classmethod
    def from_univariate_in_product(cls, poly: UniPoly, nvars: int) -> "MultiLaurent":
        """Expand p(x1*...*xn)."""
        return cls._wrap(nvars, {(power,) * nvars: c for power, c in enumerate(poly.coeffs) if c})

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Terms in canonical (descending lexicographic) exponent order."""
        for exps in sorted(self._terms, reverse=True):
            yield exps, self._terms[exps]

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_polynomial(self) -> bool:
        return all(e >= 0 for exps in self._terms for e in exps)

    def min_total_degree(self) -> Optional[int]:
        if not self._terms:
            return None
        return min(sum(exps) for exps in self._terms)

    def max_exponent(self, index: int) -> int:
        return max((exps[index] for exps in self._terms), default=0)

    def mentioned_variables(self) -> List[int]:
        return [i for i in range(self.nvars) if any(exps[i] for exps in self._terms)]

    def _check(self, other: "MultiLaurent") -> None:
        if other.nvars != self.nvars:
            raise ValueError(f"mismatched variable counts {self.nvars} and {other.nvars}")

    def __add__(self, other: Union["MultiLaurent", Scalar]) -> "MultiLaurent":
        if not isinstance(other, MultiLaurent):
            other = MultiLaurent.constant(self.nvars, other)
        self._check(other)
        out = dict(self._terms)
        for exps, c in other._terms.items():
            value = out.get(exps, Fraction(0)) + c
            if value:
                out[exps] = value
            else:
                out.pop(exps, None)
        return MultiLaurent._wrap(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiLaurent":
        return MultiLaurent._wrap(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union["MultiLaurent", Scalar]) -> "MultiLaurent":
        if not isinstance(other, MultiLaurent):
            other = MultiLaurent.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "MultiLaurent":
        return MultiLaurent.constant(self.nvars, other) - self

    def scale(self, value: Scalar) -> "MultiLaurent":
        value = Fraction(value)
        if not value:
            return MultiLaurent.zero(self.nvars)
        return MultiLaurent._wrap(self.nvars, {e: c * value for e, c in self._terms.items()})

    def __mul__(self, other: Union["MultiLaurent", Scalar]) -> "MultiLaurent":
        if not isinstance(other, MultiLaurent):
            return self.scale(other)
        self._check(other)
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return MultiLaurent._wrap(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiLaurent":
        if exponent < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = MultiLaurent.constant(self.nvars, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def times_monomial(self, exps: Sequence[int], value: Scalar = 1) -> "MultiLaurent":
        shift = tuple(exps)
        value = Fraction(value)
        if not value:
            return MultiLaurent.zero(self.nvars)
        return MultiLaurent._wrap(
            self.nvars,
            {tuple(a + b for a, b in zip(e, shift)): c * value for e, c in self._terms.items()},
        )

    def diff(self, index: int) -> "MultiLaurent":
        """Partial derivative with respect to x_{index+1}."""
        out = {}
        for exps, c in self._terms.items():
            e = exps[index]
            if e:
                key = exps[:index] + (e - 1,) + exps[index + 1:]
                out[key] = c * e
        return MultiLaurent._wrap(self.nvars, out)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(point)}")
        values = [Fraction(p) for p in point]
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for v, e in zip(values, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def substitute(self, index: int, value: Scalar) -> "MultiLaurent":
        """Set x_{index+1} = value; the variable stays in place with exponent 0."""
        value = Fraction(value)
        out: Dict[Exponent, Fraction] = {}
        for exps, c in self._terms.items():
            e = exps[index]
            if e and not value:
                if e < 0:
                    raise ZeroDivisionError("substituting 0 into a negative power")
                continue
            key = exps[:index] + (0,) + exps[index + 1:]
            out[key] = out.get(key, Fraction(0)) + c * value ** e
        return MultiLaurent._wrap(self.nvars, {e: c for e, c in out.items() if c})

    def drop_variable(self, index: int) -> "MultiLaurent":
        """Remove x_{index+1}, which must not occur, and reindex the rest."""
        out = {}
        for exps, c in self._terms.items():
            if exps[index]:
                raise ValueError(f"x{index + 1} still occurs in {self}")
            out[exps[:index] + exps[index + 1:]] = c
        return MultiLaurent._wrap(self.nvars - 1, out)

    def insert_variable(self, index: int) -> "MultiLaurent":
        """Embed into nvars+1 variables with a new x_{index+1} of exponent 0."""
        return MultiLaurent._wrap(
            self.nvars + 1,
            {exps[:index] + (0,) + exps[index:]: c for exps, c in self._terms.items()},
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiLaurent):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MultiLaurent.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def to_str(self, var: str = "x") -> str:
        pieces = []
        for exps, c in self.items():
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"{var}{i + 1}")
                elif e:
                    factors.append(f"{var}{i + 1}^{e}")
            if not factors:
                body = format_rational(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rational(abs(c))] + factors)
            pieces.append((c < 0, body))
        return _join_signed(pieces)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"MultiLaurent({self.nvars}, {self.to_str()})"


_TABLE_LOCK = threading.Lock()
_HARMONIC: Dict[int, List[Fraction]] = {}
_BERNOULLI: List[Fraction] = [Fraction(1)]


def harmonic(r: int, m: int) -> Fraction:
    """Generalized harmonic number H^(r)_m = sum_{i=1..m} i^(-r)."""
    if r < 1 or m < 0:
        raise ValueError(f"harmonic needs r >= 1 and m >= 0, got r={r}, m={m}")
    with _TABLE_LOCK:
        table = _HARMONIC.setdefault(r, [Fraction(0)])
        while len(table) <= m:
            i = len(table)
            table.append(table[-1] + Fraction(1, i ** r))
        return table[m]


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m with the convention B_1 = -1/2.

    Uses the recurrence sum_{j=0..m} C(m+1, j) B_j = 0 for m >= 1.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    with _TABLE_LOCK:
        while len(_BERNOULLI) <= m:
            n = len(_BERNOULLI)
            s = sum(comb(n + 1, j) * _BERNOULLI[j] for j in range(n))
            _BERNOULLI.append(-s / (n + 1))
        return _BERNOULLI[m]


def binomial_poly(N: int) -> UniPoly:
    """binom(k+N-1, N-1) = (k+1)(k+2)...(k+N-1)/(N-1)! as a polynomial in k."""
    if N < 1:
        raise ValueError(f"binomial_poly needs N >= 1, got {N}")
    result = UniPoly.constant(1)
    for i in range(1, N):
        result = result * UniPoly.linear(i)
    return result * Fraction(1, factorial(N - 1))


@lru_cache(maxsize=None)
def _one_minus_power(e: int) -> Tuple[Tuple[int, int], ...]:
    """(1 - y)^e as ((power, coefficient), ...) in increasing powers."""
    return tuple((t, (-1) ** t * comb(e, t)) for t in range(e + 1))


def substitute_one_minus(P: MultiLaurent, below_degree: Optional[int] = None) -> MultiLaurent:
    """Expand P with x_i -> 1 - y_i.

    With ``below_degree`` only the monomials of total degree < below_degree are
    kept, which is all the integrability criterion needs.
    """
    if not P.is_polynomial():
        raise NotPolynomial(f"substitute_one_minus needs a polynomial, got {P}")
    terms = dict(P._terms)
    for i in range(P.nvars):
        step: Dict[Exponent, Fraction] = {}
        for exps, c in terms.items():
            done = sum(exps[:i])
            for t, w in _one_minus_power(exps[i]):
                if below_degree is not None and done + t >= below_degree:
                    break
                key = exps[:i] + (t,) + exps[i + 1:]
                step[key] = step.get(key, Fraction(0)) + c * w
        terms = {e: c for e, c in step.items() if c}
    return MultiLaurent._wrap(P.nvars, terms)


def invert_substitute(P: MultiLaurent, m: int) -> MultiLaurent:
    """(x1*...*xn)^m * P(1/x1, ..., 1/xn)."""
    return MultiLaurent._wrap(
        P.nvars, {tuple(m - e for e in exps): c for exps, c in P._terms.items()}
    )


def product_of_univariates(factors: Sequence[UniPoly]) -> MultiLaurent:
    """prod_i f_i(x_i) expanded, one factor per variable."""
    n = len(factors)
    expansions = [[(p, c) for p, c in enumerate(f.coeffs) if c] for f in factors]
    terms = {}
    for combo in product(*expansions):
        terms[tuple(p for p, _ in combo)] = prod((c for _, c in combo), start=Fraction(1))
    return MultiLaurent._wrap(n, terms)
