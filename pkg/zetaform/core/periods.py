"""Eulerian combinatorics, hypersimplex volumes and the graded period matrices."""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import List, Tuple

from zetaform.core.errors import EnumerationBound, InternalInconsistency
from zetaform.core.exactalg import UniPoly
from zetaform.core.graded import GradedScalar
from zetaform.core.matrices import GradedMatrix, RationalMatrix

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_BOUND = 9


@lru_cache(maxsize=None)
def eulerian_poly(r: int) -> UniPoly:
    """E_r from E_{r+1}(x) = x(1-x)E_r'(x) + (1+rx)E_r(x), E_0 = 1."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if r == 0:
        return UniPoly.constant(1)
    prev = eulerian_poly(r - 1)
    x_one_minus_x = UniPoly((0, 1, -1))
    return x_one_minus_x * prev.derivative() + UniPoly((1, r - 1)) * prev


@lru_cache(maxsize=None)
def eulerian_number(n: int, k: int) -> int:
    """<n, k>, the coefficient of x^k in E_n; zero outside 0 <= k <= n-1."""
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k >= n:
        return 0
    return (n - k) * eulerian_number(n - 1, k - 1) + (k + 1) * eulerian_number(n - 1, k)


def hypersimplex_volume(n: int, k: int) -> Fraction:
    """Volume of {t in [0,1]^n : k <= t_1 + ... + t_n <= k+1}."""
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError(f"hypersimplex_volume needs n >= 1 and 0 <= k <= n-1, got n={n}, k={k}")
    return Fraction(eulerian_number(n, k), factorial(n))


def count_descents(perm: Tuple[int, ...]) -> int:
    return sum(1 for a, b in zip(perm, perm[1:]) if a > b)


def descent_volume_oracle(n: int, k: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> Fraction:
    """Share of permutations of {1..n} with exactly k descents, by enumeration."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > bound:
        raise EnumerationBound(f"refusing to enumerate {n}! permutations (bound is n <= {bound})")
    hits = sum(1 for perm in permutations(range(1, n + 1)) if count_descents(perm) == k)
    return Fraction(hits, factorial(n))


def boundary_matrix(n: int) -> RationalMatrix:
    """The (n-1) x n matrix of the boundary map in the hypersimplex bases."""
    if n < 2:
        raise ValueError(f"boundary_matrix needs n >= 2, got {n}")
    rows = [[0] * n for _ in range(n - 1)]
    rows[0][0] = 1
    for k in range(1, n - 1):
        rows[k][k] = 1
        rows[k - 1][k] = -1
    rows[n - 2][n - 1] = -1
    return RationalMatrix(rows)


def matrix_A(n: int) -> RationalMatrix:
    if n < 1:
        raise ValueError(f"matrix_A needs n >= 1, got {n}")
    rows = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i][i] = 1
        rows[i + 1][i] = -1
    for i in range(n):
        rows[i][n - 1] = eulerian_number(n, i)
    return RationalMatrix(rows)


@lru_cache(maxsize=None)
def matrix_Q(n: int) -> RationalMatrix:
    """Q_1 = (1), Q_n = blockdiag(Q_{n-1}, n!) A_n^(-1)."""
    if n < 1:
        raise ValueError(f"matrix_Q needs n >= 1, got {n}")
    if n == 1:
        return RationalMatrix([[1]])
    A = matrix_A(n)
    det = A.determinant()
    if det != factorial(n):
        raise InternalInconsistency(f"det A_{n} = {det}, expected {factorial(n)}")
    return RationalMatrix.block_diag(matrix_Q(n - 1), factorial(n)) @ A.inverse()


@lru_cache(maxsize=None)
def matrix_P(n: int) -> GradedMatrix:
    """P_1 = (T), P_n = A_n blockdiag(P_{n-1}, T^n/n!)."""
    if n < 1:
        raise ValueError(f"matrix_P needs n >= 1, got {n}")
    if n == 1:
        return GradedMatrix([[GradedScalar.t_power(1)]])
    corner = GradedScalar.t_power(n, Fraction(1, factorial(n)))
    return matrix_A(n) @ GradedMatrix.block_diag(matrix_P(n - 1), corner)


def verify_sigma_diagonal(n: int) -> bool:
    """Q_n P_n == Diag(T, T^2, ..., T^n)."""
    product = matrix_Q(n) @ matrix_P(n)
    expected = GradedMatrix.diagonal([GradedScalar.t_power(m) for m in range(1, n + 1)])
    ok = product == expected
    logger.debug("Q_%d P_%d diagonal: %s", n, n, ok)
    return ok


def last_row_is_ones(n: int) -> bool:
    return all(x == 1 for x in matrix_Q(n).rows[-1])


def sigma_cycles(n: int) -> List[Tuple[Fraction, ...]]:
    """Cycle k as coefficients on the hypersimplices Delta(n, 0..n-1)."""
    return list(matrix_Q(n).rows)
