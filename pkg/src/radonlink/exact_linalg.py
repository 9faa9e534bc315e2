"""Dense exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator).  Vectors are tuples of fractions, matrices are tuples of row
tuples.  Every routine accepts any nested sequence of ints/Fractions and
never rounds.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

Rational = Fraction
Vec = Tuple[Fraction, ...]
Mat = Tuple[Vec, ...]


class DimensionError(ValueError):
    """Operand shapes do not fit the operation."""


def vec(entries: Iterable) -> Vec:
    v = tuple(Fraction(e) for e in entries)
    if not v:
        raise DimensionError("vector must have positive length")
    return v


def mat(rows: Iterable[Iterable]) -> Mat:
    m = tuple(tuple(Fraction(e) for e in row) for row in rows)
    if not m or not m[0]:
        raise DimensionError("matrix must have positive shape")
    width = len(m[0])
    if any(len(row) != width for row in m):
        raise DimensionError("ragged matrix rows")
    return m


def shape(m: Sequence[Sequence]) -> Tuple[int, int]:
    return len(m), len(m[0])


def matvec(m: Sequence[Sequence], x: Sequence) -> Vec:
    m = mat(m)
    if len(x) != len(m[0]):
        raise DimensionError(f"matrix has {len(m[0])} columns, vector has {len(x)} entries")
    return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in m)


def transpose(m: Sequence[Sequence]) -> Mat:
    return tuple(zip(*mat(m)))


def determinant(m: Sequence[Sequence]) -> Fraction:
    """Exact determinant.

    Integer matrices go through Bareiss elimination; anything else through
    Gaussian elimination over fractions with the first nonzero pivot.
    """
    a = [list(row) for row in mat(m)]
    size = len(a)
    if any(len(row) != size for row in a):
        raise DimensionError(f"determinant needs a square matrix, got {size}x{len(a[0])}")
    if all(x.denominator == 1 for row in a for x in row):
        return Fraction(_bareiss([[x.numerator for x in row] for row in a]))
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, size):
            f = a[r][col]
            if f == 0:
                continue
            f /= p
            row, prow = a[r], a[col]
            for c in range(col + 1, size):
                row[c] -= f * prow[c]
    return det


def _bareiss(a) -> int:
    """Fraction-free elimination on an integer matrix; every division is exact."""
    size = len(a)
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        p = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * p - a[i][k] * a[k][j]) // prev
        prev = p
    return sign * a[-1][-1]


def rref(m: Sequence[Sequence]) -> Tuple[Mat, Tuple[int, ...]]:
    """Reduced row-echelon form and the pivot columns.

    Pivots are chosen as the first nonzero entry scanning columns left to
    right, so the result depends only on the matrix.
    """
    a = [list(row) for row in mat(m)]
    rows, cols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][c]
        a[r] = [e / p for e in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in a), tuple(pivots)


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1])


def null_space_basis(m: Sequence[Sequence]) -> list:
    """Basis of ``{x : m x = 0}``, one vector per free column (ascending).

    The vector for free column ``f`` has a 1 at ``f``, zeros at the other
    free columns, and the negated RREF entries at the pivot columns.
    """
    reduced, pivots = rref(m)
    cols = len(reduced[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * cols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(m: Sequence[Sequence], b: Sequence) -> Optional[Vec]:
    """Solve ``m x = b`` for a possibly non-square ``m``.

    Returns the unique solution, or None when the system is inconsistent.
    Raises :class:`ValueError` when the solution is not unique.
    """
    m = mat(m)
    if len(b) != len(m):
        raise DimensionError(f"matrix has {len(m)} rows, right-hand side has {len(b)}")
    cols = len(m[0])
    reduced, pivots = rref([row + (Fraction(rhs),) for row, rhs in zip(m, b)])
    if cols in pivots:
        return None
    if len(pivots) < cols:
        raise ValueError("system has infinitely many solutions")
    x = [Fraction(0)] * cols
    for row, p in zip(reduced, pivots):
        x[p] = row[cols]
    return tuple(x)


def solve_square(m: Sequence[Sequence], b: Sequence) -> Optional[Vec]:
    """Unique solution of a square system, or None if ``m`` is singular."""
    m = mat(m)
    if len(m) != len(m[0]):
        raise DimensionError(f"solve_square needs a square matrix, got {len(m)}x{len(m[0])}")
    if len(b) != len(m):
        raise DimensionError(f"matrix has {len(m)} rows, right-hand side has {len(b)}")
    try:
        return solve(m, b)
    except ValueError:
        return None
