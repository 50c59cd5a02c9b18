"""Parser and printer for form expressions.

Grammar (whitespace is insignificant)::

    form     := poly [ "/" "(" "1" "-" prodvar ")" [ "^" uint ] ]
    poly     := [ "-" ] term ( ("+" | "-") term )*
    term     := factor ( "*" factor )*
    factor   := atom ( "^" uint )*
    atom     := rational | var | "(" poly ")"
    rational := uint [ "/" uint ]
    var      := "x" uint
    prodvar  := var ( "*" var )*

A "/" directly followed by an integer is part of a rational literal; any
other "/" at the top level starts the denominator.
"""
import re
from fractions import Fraction
from typing import Iterator, List, NamedTuple, Optional, Tuple

from zetaform.core.errors import DenominatorShape, ParseError
from zetaform.core.exactalg import MultiLaurent
from zetaform.core.forms import ZetaIntegrand

TOKEN_PATTERNS = {
    "var": r"x(?P<index>\d+)",
    "int": r"\d+",
    "lpar": r"\(",
    "rpar": r"\)",
    "plus": r"\+",
    "minus": r"-",
    "mul": r"\*",
    "div": r"/",
    "pow": r"\^",
    "skip": r"[ \t\r\n]+",
    "error": r".",
}
_REGEX = re.compile("|".join(f"(?P<{name}>{text})" for name, text in TOKEN_PATTERNS.items()))


class Token(NamedTuple):
    type: str
    value: str
    where: Tuple[int, int]


def tokenize(text: str) -> Iterator[Token]:
    for mo in _REGEX.finditer(text):
        kind = str(mo.lastgroup)
        if kind == "index":
            kind = "var"
        if kind == "skip":
            continue
        value = mo.group("index") if kind == "var" else mo.group()
        if kind == "error":
            line, column = _position(text, mo.start())
            raise ParseError(f"unexpected character {value!r}", line, column, text)
        yield Token(kind, value, (mo.start(), mo.end()))
    yield Token("end", "", (len(text), len(text)))


def _position(text: str, offset: int) -> Tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


class _Poly:
    """Polynomial under construction: exponent dict keyed by variable index (1-based)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def constant(cls, value: Fraction) -> "_Poly":
        return cls({(): value})

    @classmethod
    def variable(cls, index: int) -> "_Poly":
        return cls({((index, 1),): Fraction(1)})

    def __add__(self, other: "_Poly") -> "_Poly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return _Poly(out)

    def __neg__(self) -> "_Poly":
        return _Poly({k: -c for k, c in self.terms.items()})

    def __mul__(self, other: "_Poly") -> "_Poly":
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                merged = dict(k1)
                for var, e in k2:
                    merged[var] = merged.get(var, 0) + e
                key = tuple(sorted(merged.items()))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return _Poly(out)

    def __pow__(self, exponent: int) -> "_Poly":
        result = _Poly.constant(Fraction(1))
        for _ in range(exponent):
            result = result * self
        return result

    def max_index(self) -> int:
        return max((var for key in self.terms for var, _ in key), default=0)

    def to_laurent(self, n: int) -> MultiLaurent:
        terms = {}
        for key, c in self.terms.items():
            exps = [0] * n
            for var, e in key:
                exps[var - 1] += e
            terms[tuple(exps)] = c
        return MultiLaurent(n, terms)


class FormParser:
    """Recursive descent over the token stream of one expression."""

    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Token] = list(tokenize(text))
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def error(self, message: str, token: Optional[Token] = None, cls: type = ParseError) -> ParseError:
        token = token or self.current
        line, column = _position(self.text, token.where[0])
        return cls(message, line, column, self.text)

    def advance(self, kind: Optional[str] = None, label: Optional[str] = None, literal: Optional[str] = None) -> Token:
        """Consume the current token.

        Args:
            kind: token type the current token must have, if given.
            label: how the expected token is named in error messages.
            literal: exact text the token must carry, if given.

        Returns:
            The consumed token.
        """
        token = self.current
        found = "end of input" if token.type == "end" else repr(token.value)
        if kind is not None and token.type != kind:
            raise self.error(f"expected {label or kind}, found {found}")
        if literal is not None and token.value != literal:
            raise self.error(f"expected {label or repr(literal)}, found {found}")
        self.pos += 1
        return token

    def uint(self) -> int:
        return int(self.advance("int", "an integer").value)

    def parse(self, n: Optional[int] = None) -> ZetaIntegrand:
        numerator = self.poly()
        denominator: Optional[List[Token]] = None
        pole_order = 0
        if self.current.type == "div":
            self.advance()
            denominator, pole_order = self.denominator()
        if self.current.type != "end":
            raise self.error(f"unexpected {self.current.value!r}")
        mentioned = numerator.max_index()
        if denominator:
            mentioned = max(mentioned, max(int(t.value) for t in denominator))
        if n is None:
            n = mentioned
        elif n < mentioned:
            raise self.error(f"--n {n} is smaller than the largest variable index {mentioned}", self.tokens[0])
        if n < 1:
            raise self.error("cannot infer the number of variables; pass n explicitly", self.tokens[0])
        if denominator is not None:
            indices = sorted(int(t.value) for t in denominator)
            if indices != list(range(1, n + 1)):
                raise self.error(
                    f"denominator must be (1 - x1*...*x{n}) with every variable exactly once",
                    denominator[0],
                    DenominatorShape,
                )
        return ZetaIntegrand(n, numerator.to_laurent(n), pole_order)

    def denominator(self) -> Tuple[List[Token], int]:
        self.advance("lpar", "'('")
        one = self.advance("int", "'1'")
        if one.value != "1":
            raise self.error("denominator must start with 1", one, DenominatorShape)
        if self.current.type != "minus":
            raise self.error("denominator must be 1 - x1*...*xn", cls=DenominatorShape)
        self.advance()
        variables = [self.advance("var", "a variable")]
        while self.current.type == "mul":
            self.advance()
            variables.append(self.advance("var", "a variable"))
        if self.current.type != "rpar":
            raise self.error("denominator must be 1 - x1*...*xn", cls=DenominatorShape)
        self.advance()
        power = 1
        if self.current.type == "pow":
            self.advance()
            power = self.uint()
        return variables, power

    def poly(self) -> _Poly:
        negate = False
        if self.current.type == "minus":
            self.advance()
            negate = True
        result = self.term()
        if negate:
            result = -result
        while self.current.type in ("plus", "minus"):
            op = self.advance()
            rhs = self.term()
            result = result + (rhs if op.type == "plus" else -rhs)
        return result

    def term(self) -> _Poly:
        result = self.factor()
        while self.current.type == "mul":
            self.advance()
            result = result * self.factor()
        return result

    def factor(self) -> _Poly:
        result = self.atom()
        while self.current.type == "pow":
            self.advance()
            result = result ** self.uint()
        return result

    def atom(self) -> _Poly:
        token = self.current
        if token.type == "int":
            self.advance()
            value = Fraction(int(token.value))
            if self.current.type == "div" and self.peek().type == "int":
                self.advance()
                denominator = self.uint()
                if denominator == 0:
                    raise self.error("zero denominator in a rational literal", token)
                value /= denominator
            return _Poly.constant(value)
        if token.type == "var":
            self.advance()
            index = int(token.value)
            if index < 1:
                raise self.error("variables are numbered from x1", token)
            return _Poly.variable(index)
        if token.type == "lpar":
            self.advance()
            inner = self.poly()
            self.advance("rpar", "')'")
            return inner
        found = "end of input" if token.type == "end" else repr(token.value)
        raise self.error(f"expected a number, a variable or '(', found {found}")


def parse_form(text: str, n: Optional[int] = None) -> ZetaIntegrand:
    """Parse an expression; n defaults to the largest variable index mentioned."""
    return FormParser(text).parse(n)


def format_form(form: ZetaIntegrand) -> str:
    """Canonical text that parse_form maps back to the same form."""
    return str(form)
