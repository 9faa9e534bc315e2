"""Circular sign sweep over the solution plane of the affine dependency system.

Solutions of ``sum x_i A_i = 0, sum x_i = 0`` form a plane spanned by two
vectors u, v.  A direction (s, t) in that plane stands for the solution
``s*u + t*v``; its i-th coordinate vanishes on the line ``s*u_i + t*v_i = 0``.
Walking once around the origin crosses every such line twice, and each
crossing flips exactly one coordinate sign.  Crossings with balanced sign
counts give Radon-type partitions (even n) or linked pairs (odd n).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import List, Sequence, Tuple

from .configuration import Configuration, build_system, require_general_position
from .errors import InvalidWitnessError, ParityError, TheoremViolation
from .exact_linalg import Vec, matvec, null_space_basis
from .verify import INTERIOR, LINKING, Certificate, Witness, combine, linking_counts

Direction = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PlaneBasis:
    u: Vec
    v: Vec

    def at(self, d: Direction) -> Vec:
        s, t = d
        return tuple(s * a + t * b for a, b in zip(self.u, self.v))


@dataclass(frozen=True)
class LineNormal:
    index: int
    a: Fraction
    b: Fraction

    @property
    def direction(self) -> Direction:
        return (-self.b, self.a)


@dataclass(frozen=True)
class Crossing:
    index: int
    direction: Direction
    pattern: Tuple[int, ...]

    @property
    def plus(self) -> Tuple[int, ...]:
        return tuple(j for j, s in enumerate(self.pattern, 1) if s > 0)

    @property
    def minus(self) -> Tuple[int, ...]:
        return tuple(j for j, s in enumerate(self.pattern, 1) if s < 0)


@dataclass(frozen=True)
class SweepOrder:
    crossings: Tuple[Crossing, ...]
    sectors: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class PartitionResult:
    parity: str
    first: Tuple[int, ...]
    second: Tuple[int, ...]
    certificate: Certificate


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def compute_plane(c: Configuration) -> PlaneBasis:
    require_general_position(c)
    basis = null_space_basis(build_system(c))
    if len(basis) != 2:
        raise TheoremViolation(f"solution plane has dimension {len(basis)}, expected 2")
    return PlaneBasis(*basis)


def line_normals(basis: PlaneBasis) -> List[LineNormal]:
    normals = [LineNormal(i, a, b) for i, (a, b) in enumerate(zip(basis.u, basis.v), 1)]
    for p in normals:
        if p.a == 0 and p.b == 0:
            raise TheoremViolation(f"line {p.index} has a zero normal")
    for k, p in enumerate(normals):
        for q in normals[k + 1:]:
            if p.a * q.b - q.a * p.b == 0:
                raise TheoremViolation(f"lines {p.index} and {q.index} coincide")
    return normals


def _half(d: Direction) -> int:
    x, y = d
    return 0 if y > 0 or (y == 0 and x > 0) else 1


def _ccw_cmp(d: Direction, e: Direction) -> int:
    hd, he = _half(d), _half(e)
    if hd != he:
        return hd - he
    return -_sign(d[0] * e[1] - d[1] * e[0])


def _canonical(d: Direction) -> Direction:
    first = d[0] if d[0] != 0 else d[1]
    return d if first > 0 else (-d[0], -d[1])


def sweep(normals: List[LineNormal]) -> SweepOrder:
    """All 2(n+3) crossings in counterclockwise order, starting on line 1.

    The start is the representative of line 1 whose first nonzero
    component is positive.  Sector k lies between crossings k and k+1 and
    is evaluated at the sum of their directions.
    """
    def pattern(d: Direction) -> Tuple[int, ...]:
        s, t = d
        return tuple(_sign(s * p.a + t * p.b) for p in normals)

    entries = []
    for p in normals:
        d = p.direction
        for rep in (d, (-d[0], -d[1])):
            entries.append((rep, p.index))
    entries.sort(key=cmp_to_key(lambda x, y: _ccw_cmp(x[0], y[0])))
    start = _canonical(normals[0].direction)
    k0 = next(k for k, (d, i) in enumerate(entries) if i == normals[0].index and d == start)
    entries = entries[k0:] + entries[:k0]

    crossings = tuple(Crossing(i, d, pattern(d)) for d, i in entries)
    m = len(crossings)
    sectors = []
    for k in range(m):
        d, e = crossings[k].direction, crossings[(k + 1) % m].direction
        sectors.append(pattern((d[0] + e[0], d[1] + e[1])))
    return SweepOrder(crossings, tuple(sectors))


def sweep_configuration(c: Configuration) -> Tuple[PlaneBasis, SweepOrder]:
    basis = compute_plane(c)
    return basis, sweep(line_normals(basis))


def lemma_intersection_point(c: Configuration, x: Sequence) -> Witness:
    """Common interior point of conv{A_i : x_i > 0} and conv{A_i : x_i < 0}.

    ``x`` must be a nonzero solution of the dependency system.  With
    ``S = sum of the positive x_i`` the point is ``sum_{x_i>0} (x_i/S) A_i``;
    the face side of the returned witness is the positive set.
    """
    x = tuple(Fraction(e) for e in x)
    if len(x) != c.size:
        raise InvalidWitnessError(f"witness has {len(x)} entries, expected {c.size}")
    if all(e == 0 for e in x):
        raise InvalidWitnessError("witness is the zero vector")
    if any(matvec(build_system(c), x)):
        raise InvalidWitnessError("witness does not solve the dependency system")
    plus = tuple(i for i, e in enumerate(x, 1) if e > 0)
    minus = tuple(i for i, e in enumerate(x, 1) if e < 0)
    total = sum(x[i - 1] for i in plus)
    coeffs_plus = tuple(x[i - 1] / total for i in plus)
    coeffs_minus = tuple(-x[i - 1] / total for i in minus)
    return Witness(combine(c, plus, coeffs_plus), plus, coeffs_plus, minus, coeffs_minus)


def _ordered(a: Tuple[int, ...], b: Tuple[int, ...]):
    return (a, b) if a <= b else (b, a)


def find_even_partition(c: Configuration) -> PartitionResult:
    if c.n % 2:
        raise ParityError(f"even-case partition needs even n, got n={c.n}")
    basis, order = sweep_configuration(c)
    half = (c.n + 2) // 2
    for cr in order.crossings:
        if len(cr.plus) == half and len(cr.minus) == half:
            w = lemma_intersection_point(c, basis.at(cr.direction))
            first, second = _ordered(w.face, w.body)
            return PartitionResult("even", first, second, Certificate(INTERIOR, (w,)))
    raise TheoremViolation("no crossing with balanced signs")


def find_odd_partition(c: Configuration) -> PartitionResult:
    """Linked pair from two adjacent crossings with opposite sign surpluses.

    ``x1`` has (n+3)/2 plus signs, ``x2`` has (n+3)/2 minus signs.  The
    positives of x1 and the negatives of x2 partition all indices into the
    vertex sets D, D' of two linked simplices.
    """
    if c.n % 2 == 0:
        raise ParityError(f"odd-case partition needs odd n, got n={c.n}")
    basis, order = sweep_configuration(c)
    big, small = (c.n + 3) // 2, (c.n + 1) // 2

    def surplus(cr: Crossing) -> int:
        if len(cr.plus) == big and len(cr.minus) == small:
            return 1
        if len(cr.plus) == small and len(cr.minus) == big:
            return -1
        return 0

    m = len(order.crossings)
    for k in range(m):
        p, q = order.crossings[k], order.crossings[(k + 1) % m]
        if {surplus(p), surplus(q)} != {1, -1}:
            continue
        x1, x2 = (p, q) if surplus(p) == 1 else (q, p)
        outer, inner = x1.plus, x2.minus
        if set(outer) | set(inner) != set(range(1, c.size + 1)):
            raise TheoremViolation(f"adjacent crossings at step {k} do not partition the points")
        # x2: facet of D (its positives) inside D'; x1: facet of D' (its negatives) inside D
        w2 = lemma_intersection_point(c, basis.at(x2.direction))
        w1 = lemma_intersection_point(c, basis.at(x1.direction))
        on_outer = Witness(w2.point, w2.face, w2.face_coeffs, w2.body, w2.body_coeffs)
        on_inner = Witness(w1.point, w1.body, w1.body_coeffs, w1.face, w1.face_coeffs)
        counts = linking_counts(c, outer, inner)
        cert = Certificate(LINKING, (on_outer, on_inner), (outer, inner), counts)
        first, second = _ordered(outer, inner)
        return PartitionResult("odd", first, second, cert)
    raise TheoremViolation("no adjacent crossing pair with opposite sign surpluses")


def find_partition(c: Configuration) -> PartitionResult:
    return find_even_partition(c) if c.n % 2 == 0 else find_odd_partition(c)
