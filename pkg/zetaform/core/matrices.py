"""Exact matrices over Q and over Q[T]."""
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from zetaform.core.exactalg import Scalar, format_rational
from zetaform.core.graded import GradedScalar


class RationalMatrix:
    """Dense matrix of Fractions; rectangular shapes are allowed."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if data and any(len(row) != len(data[0]) for row in data):
            raise ValueError("ragged matrix rows")
        self.rows: Tuple[Tuple[Fraction, ...], ...] = data

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def block_diag(cls, upper: "RationalMatrix", corner: Scalar) -> "RationalMatrix":
        """[[upper, 0], [0, corner]]."""
        n = upper.nrows
        rows = [list(row) + [0] for row in upper.rows]
        rows.append([0] * n + [corner])
        return cls(rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.rows[i][j]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self.rows)))

    def apply(self, vector: Sequence[Scalar]) -> List[Fraction]:
        if len(vector) != self.ncols:
            raise ValueError(f"vector of length {len(vector)} for {self.ncols} columns")
        return [sum((a * Fraction(x) for a, x in zip(row, vector)), Fraction(0)) for row in self.rows]

    def __matmul__(self, other: Union["RationalMatrix", "GradedMatrix"]) -> Union["RationalMatrix", "GradedMatrix"]:
        if isinstance(other, GradedMatrix):
            return GradedMatrix.from_rational(self) @ other
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return RationalMatrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self.rows]
        )

    def inverse(self) -> "RationalMatrix":
        """Gauss-Jordan elimination; raises ZeroDivisionError when singular."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("only square matrices can be inverted")
        work = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                raise ZeroDivisionError("matrix is singular")
            work[col], work[pivot] = work[pivot], work[col]
            lead = work[col][col]
            work[col] = [x / lead for x in work[col]]
            for r in range(n):
                if r != col and work[r][col] != 0:
                    factor = work[r][col]
                    work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return RationalMatrix([row[n:] for row in work])

    def determinant(self) -> Fraction:
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        work = [list(row) for row in self.rows]
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            lead = work[col][col]
            det *= lead
            for r in range(col + 1, n):
                factor = work[r][col] / lead
                if factor:
                    work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return det

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def to_lists(self) -> List[List[str]]:
        return [[format_rational(x) for x in row] for row in self.rows]

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(row) + "]" for row in self.to_lists())

    def __repr__(self) -> str:
        return f"RationalMatrix({self.to_lists()})"


class GradedMatrix:
    """Matrix with GradedScalar entries; products need pure T-polynomials."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[GradedScalar]]):
        data = tuple(tuple(row) for row in rows)
        if data and any(len(row) != len(data[0]) for row in data):
            raise ValueError("ragged matrix rows")
        self.rows: Tuple[Tuple[GradedScalar, ...], ...] = data

    @classmethod
    def from_rational(cls, matrix: RationalMatrix) -> "GradedMatrix":
        return cls([[GradedScalar.rational(x) for x in row] for row in matrix.rows])

    @classmethod
    def diagonal(cls, entries: Sequence[GradedScalar]) -> "GradedMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else GradedScalar() for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, upper: "GradedMatrix", corner: GradedScalar) -> "GradedMatrix":
        n = upper.nrows
        rows = [list(row) + [GradedScalar()] for row in upper.rows]
        rows.append([GradedScalar()] * n + [corner])
        return cls(rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, index: Tuple[int, int]) -> GradedScalar:
        i, j = index
        return self.rows[i][j]

    def __matmul__(self, other: Union["GradedMatrix", RationalMatrix]) -> "GradedMatrix":
        if isinstance(other, RationalMatrix):
            other = GradedMatrix.from_rational(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        out = []
        for row in self.rows:
            new_row = []
            for j in range(other.ncols):
                acc = GradedScalar()
                for a, other_row in zip(row, other.rows):
                    b = other_row[j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return GradedMatrix(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def to_lists(self) -> List[List[str]]:
        return [[str(x) for x in row] for row in self.rows]

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(row) + "]" for row in self.to_lists())
