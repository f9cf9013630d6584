"""Reference construction of interpolatory symbols by linear algebra.

The interpolatory symbol is ``m(z) = s(z) l(z)`` where ``s`` is the
exponential B-spline symbol and ``l(z) = sum_{j=-n}^{n} y_j z^j`` is read off
row ``n+1`` of the inverse of a Hurwitz-type matrix built from the
coefficients of ``s``. This module is deliberately independent of the closed
form in :mod:`expsubdiv.symbols` (it only shares ``bspline_symbol``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import SingularMatrixError
from .laurent import LaurentPoly
from .scalar import coerce, is_exact
from .symbols import LevelParam, SubdivisionMask, bspline_symbol

PIVOT_RTOL = 1e-12


@dataclass(frozen=True)
class HurwitzSystem:
    n: int
    s_coeffs: tuple
    matrix: tuple  # rows of the (2n+1) x (2n+1) matrix

    def entry(self, r: int, c: int):
        """1-based access, matching the printed layout."""
        return self.matrix[r - 1][c - 1]


def hurwitz_matrix(s_coeffs: Sequence, n: int) -> list:
    """``A[r][c] = s_{2c-r}`` for ``r, c = 1..2n+1``; out-of-range ``s`` are 0."""
    size = 2 * n + 1
    zero = 0 * s_coeffs[0]

    def s(m):
        return s_coeffs[m] if 0 <= m < len(s_coeffs) else zero

    return [[s(2 * c - r) for c in range(1, size + 1)] for r in range(1, size + 1)]


def build_hurwitz(n: int, v) -> HurwitzSystem:
    if n < 1:
        raise ValueError("n must be positive")
    s = bspline_symbol(n, coerce(v))
    # s_j multiplies z^(j - (n+1)), j = 0 .. 2n+2
    s_coeffs = tuple(s.coeff(j - (n + 1)) for j in range(2 * n + 3))
    matrix = tuple(tuple(row) for row in hurwitz_matrix(s_coeffs, n))
    return HurwitzSystem(n, s_coeffs, matrix)


def gauss_solve(matrix: Sequence[Sequence], rhs: Sequence) -> list:
    """Solve ``A x = b`` by Gaussian elimination with partial pivoting.

    Works over ``Fraction`` (exact; only an exactly zero pivot column is
    singular) and over floats (pivot below ``PIVOT_RTOL`` times the largest
    entry is singular).
    """
    size = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    exact = all(is_exact(x) for row in aug for x in row)
    scale = max((abs(x) for row in matrix for x in row), default=0)
    if scale == 0:
        raise SingularMatrixError("zero matrix")

    for col in range(size):
        pivot_row = max(range(col, size), key=lambda r: abs(aug[r][col]))
        pivot = aug[pivot_row][col]
        if (exact and pivot == 0) or (not exact and abs(pivot) <= PIVOT_RTOL * scale):
            raise SingularMatrixError(f"pivot {pivot!r} in column {col + 1}")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        for r in range(col + 1, size):
            factor = aug[r][col] / pivot
            if factor == 0:
                continue
            row, prow = aug[r], aug[col]
            for c in range(col, size + 1):
                row[c] = row[c] - factor * prow[c]

    x = [0] * size
    for r in range(size - 1, -1, -1):
        acc = aug[r][size]
        for c in range(r + 1, size):
            acc = acc - aug[r][c] * x[c]
        x[r] = acc / aug[r][r]
    return x


def solve_ell(system: HurwitzSystem) -> LaurentPoly:
    """Row ``n+1`` of ``A^{-1}`` as the Laurent polynomial ``l(z)``.

    Solves ``A^T y = e_{n+1}`` rather than inverting ``A``; ``y`` lists the
    coefficients of ``z^-n .. z^n``.
    """
    n = system.n
    size = 2 * n + 1
    transpose = [[system.matrix[r][c] for r in range(size)] for c in range(size)]
    one = coerce(1) if is_exact(system.s_coeffs[0]) else 1.0
    rhs = [one if k == n else 0 * one for k in range(size)]
    y = gauss_solve(transpose, rhs)
    return LaurentPoly(-n, y)


def oracle_symbol(n: int, v) -> SubdivisionMask:
    v = coerce(v)
    system = build_hurwitz(n, v)
    s = bspline_symbol(n, v)
    return SubdivisionMask(s * solve_ell(system), n, LevelParam(v))
