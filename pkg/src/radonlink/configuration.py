"""Point configurations A_1..A_{n+3} in R^n and general-position checks.

Point indices are 1-based everywhere in the public API, matching the way
partitions such as ``{1,3} / {2,4}`` are reported.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Tuple

from .errors import NotGeneralPositionError
from .exact_linalg import Mat, Vec, determinant, rank


@dataclass(frozen=True)
class Configuration:
    n: int
    points: Tuple[Vec, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension must be positive, got {self.n}")
        pts = tuple(tuple(Fraction(x) for x in p) for p in self.points)
        if len(pts) != self.n + 3:
            raise ValueError(f"expected {self.n + 3} points in R^{self.n}, got {len(pts)}")
        for i, p in enumerate(pts, 1):
            if len(p) != self.n:
                raise ValueError(f"point {i} has {len(p)} coordinates, expected {self.n}")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_points(cls, points: Sequence[Sequence]) -> "Configuration":
        points = [tuple(p) for p in points]
        if not points:
            raise ValueError("empty point list")
        return cls(len(points[0]), tuple(points))

    @property
    def size(self) -> int:
        return self.n + 3

    @property
    def parity(self) -> str:
        return "even" if self.n % 2 == 0 else "odd"

    def point(self, i: int) -> Vec:
        """The point with 1-based label ``i``."""
        return self.points[i - 1]

    def relabel(self, perm: Sequence[int]) -> "Configuration":
        """New configuration whose point ``k`` is this configuration's point ``perm[k-1]``."""
        if sorted(perm) != list(range(1, self.size + 1)):
            raise ValueError(f"not a permutation of 1..{self.size}: {perm}")
        return Configuration(self.n, tuple(self.point(j) for j in perm))

    def affine_image(self, linear: Sequence[Sequence], shift: Sequence) -> "Configuration":
        """Image of every point under ``p -> linear @ p + shift``."""
        return Configuration(
            self.n,
            tuple(
                tuple(sum((Fraction(a) * x for a, x in zip(row, p)), Fraction(0)) + Fraction(s)
                      for row, s in zip(linear, shift))
                for p in self.points
            ),
        )


@dataclass(frozen=True)
class GeneralPositionReport:
    ok: bool
    violation: Optional[Tuple[int, ...]] = None


def build_system(c: Configuration) -> Mat:
    """The (n+1) x (n+3) matrix of ``sum x_i A_i = 0, sum x_i = 0``.

    Column i holds the coordinates of A_i followed by a 1.
    """
    rows = [tuple(p[k] for p in c.points) for k in range(c.n)]
    rows.append(tuple(Fraction(1) for _ in c.points))
    return tuple(rows)


def check_general_position(c: Configuration) -> GeneralPositionReport:
    """Every (n+1)-subset of columns of the system matrix must be independent.

    The first subset (lexicographic, 1-based) with a vanishing minor is
    reported as the violation.
    """
    m = build_system(c)
    for cols in combinations(range(c.size), c.n + 1):
        minor = [[row[j] for j in cols] for row in m]
        if determinant(minor) == 0:
            return GeneralPositionReport(False, tuple(j + 1 for j in cols))
    return GeneralPositionReport(True)


def check_general_position_by_differences(c: Configuration) -> GeneralPositionReport:
    """Same question, asked via difference vectors.

    For each (n+1)-subset B_0..B_n, the vectors B_k - B_0 must have full rank.
    Uses elimination rank instead of determinants, so it is independent of
    :func:`check_general_position`.
    """
    for idx in combinations(range(1, c.size + 1), c.n + 1):
        base = c.point(idx[0])
        diffs = [[a - b for a, b in zip(c.point(k), base)] for k in idx[1:]]
        if rank(diffs) < c.n:
            return GeneralPositionReport(False, idx)
    return GeneralPositionReport(True)


def require_general_position(c: Configuration) -> None:
    report = check_general_position(c)
    if not report.ok:
        raise NotGeneralPositionError(report.violation)
