"""Geometric predicates that do not depend on the sweep.

Everything here works from point coordinates alone: two index sets are
tested by solving the exact affine system

    sum(lam_i A_i) = sum(mu_j A_j),   sum(lam) = 1,   sum(mu) = 1

and inspecting the signs of the barycentric coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .configuration import Configuration, check_general_position
from .errors import CertificateError, NotGeneralPositionError, ParityError
from .exact_linalg import Vec, solve

INTERIOR = "interior-intersection"
LINKING = "linking"

Index = Tuple[int, ...]


@dataclass(frozen=True)
class Witness:
    """A point written as a convex combination over two vertex sets.

    ``face`` and ``body`` are 1-based index tuples; the coefficient tuples
    are aligned with them.
    """

    point: Vec
    face: Index
    face_coeffs: Vec
    body: Index
    body_coeffs: Vec


@dataclass(frozen=True)
class Certificate:
    """Evidence for a partition.

    Interior-intersection certificates carry one witness whose face and body
    are the two subsets.  Linking certificates carry ``roles = (D, D')`` and
    two witnesses: the first lies on a facet of D and inside D', the second
    on a facet of D' and inside D.  ``piercing_counts`` records the directed
    counts (boundary of D through D', boundary of D' through D).
    """

    kind: str
    witnesses: Tuple[Witness, ...]
    roles: Optional[Tuple[Index, Index]] = None
    piercing_counts: Optional[Tuple[int, int]] = None


@dataclass(frozen=True)
class PierceResult:
    exists: bool
    point: Optional[Vec] = None
    first_coeffs: Optional[Vec] = None
    second_coeffs: Optional[Vec] = None
    first_on_boundary: bool = False
    second_on_boundary: bool = False


def _indices(c: Configuration, idx: Sequence[int]) -> Index:
    out = tuple(sorted(int(i) for i in idx))
    if not out:
        raise ValueError("empty index set")
    if len(set(out)) != len(out) or out[0] < 1 or out[-1] > c.size:
        raise ValueError(f"bad index set {list(idx)} for {c.size} points")
    return out


def _disjoint(a: Index, b: Index) -> None:
    if set(a) & set(b):
        raise ValueError(f"index sets {list(a)} and {list(b)} overlap")


def _raise_degenerate(c: Configuration, idx: Sequence[int]):
    report = check_general_position(c)
    raise NotGeneralPositionError(report.violation or tuple(sorted(idx)))


def combine(c: Configuration, idx: Sequence[int], coeffs: Sequence[Fraction]) -> Vec:
    """The point ``sum(coeffs[k] * A_idx[k])``."""
    out = [Fraction(0)] * c.n
    for i, w in zip(idx, coeffs):
        for k, x in enumerate(c.point(i)):
            out[k] += w * x
    return tuple(out)


def _affine_meet(c: Configuration, a: Index, b: Index):
    """Unique (lam, mu) making the affine combinations agree, or None.

    None means the affine hulls are disjoint (parallel flats are allowed in
    general position).  A non-unique solution means n+1 of the points are
    affinely dependent.
    """
    rows, rhs = [], []
    for k in range(c.n):
        rows.append([c.point(i)[k] for i in a] + [-c.point(j)[k] for j in b])
        rhs.append(0)
    rows.append([1] * len(a) + [0] * len(b))
    rhs.append(1)
    rows.append([0] * len(a) + [1] * len(b))
    rhs.append(1)
    try:
        x = solve(rows, rhs)
    except ValueError:
        _raise_degenerate(c, a + b)
    if x is None:
        return None
    return x[: len(a)], x[len(a):]


def interior_intersection(c: Configuration, a: Sequence[int], b: Sequence[int]) -> PierceResult:
    """Do the relative interiors of conv(A_a) and conv(A_b) meet?"""
    a, b = _indices(c, a), _indices(c, b)
    _disjoint(a, b)
    if len(a) + len(b) > c.n + 2:
        raise ValueError(f"|a|+|b| = {len(a) + len(b)} exceeds n+2 = {c.n + 2}")
    meet = _affine_meet(c, a, b)
    if meet is None:
        return PierceResult(False)
    lam, mu = meet
    if all(x > 0 for x in lam) and all(x > 0 for x in mu):
        return PierceResult(True, combine(c, a, lam), lam, mu)
    return PierceResult(False)


def pierce(c: Configuration, facet: Sequence[int], simplex: Sequence[int]) -> PierceResult:
    """Intersection of a closed facet with the open interior of a simplex.

    ``facet`` has (n+1)/2 vertices, ``simplex`` has (n+3)/2.  The boundary
    flags report zero coefficients of a candidate point lying in both
    closed simplices; in general position neither can be set.
    """
    if c.n % 2 == 0:
        raise ParityError(f"pierce needs odd n, got n={c.n}")
    facet, simplex = _indices(c, facet), _indices(c, simplex)
    _disjoint(facet, simplex)
    if len(facet) != (c.n + 1) // 2 or len(simplex) != (c.n + 3) // 2:
        raise ValueError(
            f"need facet of {(c.n + 1) // 2} and simplex of {(c.n + 3) // 2} vertices, "
            f"got {len(facet)} and {len(simplex)}"
        )
    meet = _affine_meet(c, facet, simplex)
    if meet is None:
        return PierceResult(False)
    lam, mu = meet
    if any(x < 0 for x in lam) or any(x < 0 for x in mu):
        return PierceResult(False)
    on_facet_boundary = any(x == 0 for x in lam)
    on_simplex_boundary = any(x == 0 for x in mu)
    return PierceResult(
        exists=not on_simplex_boundary,
        point=combine(c, facet, lam),
        first_coeffs=lam,
        second_coeffs=mu,
        first_on_boundary=on_facet_boundary,
        second_on_boundary=on_simplex_boundary,
    )


def _directed_count(c: Configuration, a: Index, b: Index) -> int:
    count = 0
    for facet in combinations(a, len(a) - 1):
        res = pierce(c, facet, b)
        if res.first_on_boundary or res.second_on_boundary:
            _raise_degenerate(c, facet + b)
        count += res.exists
    return count


def linking_counts(c: Configuration, a: Sequence[int], b: Sequence[int]) -> Tuple[int, int]:
    """Piercings of boundary(a) through int(b), and of boundary(b) through int(a)."""
    if c.n % 2 == 0:
        raise ParityError(f"linking needs odd n, got n={c.n}")
    a, b = _indices(c, a), _indices(c, b)
    _disjoint(a, b)
    half = (c.n + 3) // 2
    if len(a) != half or len(b) != half:
        raise ValueError(f"linked simplices need {half} vertices each, got {len(a)} and {len(b)}")
    forward, backward = _directed_count(c, a, b), _directed_count(c, b, a)
    if (forward == 1) != (backward == 1):
        raise AssertionError(
            f"asymmetric linking for {list(a)} / {list(b)}: counts {forward} and {backward}"
        )
    return forward, backward


def linked(c: Configuration, a: Sequence[int], b: Sequence[int]) -> bool:
    """The boundary of conv(A_a) meets the interior of conv(A_b) in exactly one point."""
    return linking_counts(c, a, b)[0] == 1


def _witness_failures(c: Configuration, w: Witness, label: str) -> List[str]:
    if len(w.face) != len(w.face_coeffs) or len(w.body) != len(w.body_coeffs):
        raise CertificateError(f"{label}: coefficient count does not match vertex count")
    if len(w.point) != c.n:
        raise CertificateError(f"{label}: point has {len(w.point)} coordinates, expected {c.n}")
    out = []
    for name, idx, coeffs in (("face", w.face, w.face_coeffs), ("body", w.body, w.body_coeffs)):
        if not all(x > 0 for x in coeffs):
            out.append(f"{label}: {name} coefficients not strictly positive")
        if sum(coeffs, Fraction(0)) != 1:
            out.append(f"{label}: {name} coefficients do not sum to 1")
        if combine(c, idx, coeffs) != tuple(w.point):
            out.append(f"{label}: {name} combination does not reproduce the point")
    return out


def certificate_failures(c: Configuration, r) -> List[str]:
    """Every failed claim of a partition result, in check order.

    ``r`` is any object with ``first``, ``second`` and ``certificate``
    attributes.  Structural problems raise :class:`CertificateError`.
    """
    cert = r.certificate
    if not isinstance(cert, Certificate):
        raise CertificateError("missing certificate")
    try:
        first, second = _indices(c, r.first), _indices(c, r.second)
        faces = [(_indices(c, w.face), _indices(c, w.body)) for w in cert.witnesses]
    except ValueError as exc:
        raise CertificateError(str(exc)) from exc
    out = []
    if set(first) & set(second):
        out.append("subsets overlap")

    if cert.kind == INTERIOR:
        if c.n % 2:
            out.append(f"interior-intersection certificate for odd n={c.n}")
        half = (c.n + 2) // 2
        if len(first) != half or len(second) != half:
            out.append(f"subset sizes {len(first)}, {len(second)} differ from {half}")
        if len(cert.witnesses) != 1:
            raise CertificateError("interior-intersection certificate needs exactly one witness")
        if {faces[0][0], faces[0][1]} != {first, second}:
            out.append("witness vertex sets do not match the subsets")
        out += _witness_failures(c, cert.witnesses[0], "witness")
        return out

    if cert.kind != LINKING:
        raise CertificateError(f"unknown certificate kind {cert.kind!r}")
    if cert.roles is None or len(cert.roles) != 2 or len(cert.witnesses) != 2:
        raise CertificateError("linking certificate needs two roles and two witnesses")
    if c.n % 2 == 0:
        out.append(f"linking certificate for even n={c.n}")
        return out
    roles = (_indices(c, cert.roles[0]), _indices(c, cert.roles[1]))
    if {roles[0], roles[1]} != {first, second}:
        out.append("certificate roles do not match the subsets")
    if set(first) | set(second) != set(range(1, c.size + 1)):
        out.append("subsets do not cover every point")
    half = (c.n + 3) // 2
    if len(first) != half or len(second) != half:
        out.append(f"subset sizes {len(first)}, {len(second)} differ from {half}")
        return out
    for k, (own, other) in enumerate((roles, roles[::-1])):
        face, body = faces[k]
        if not (set(face) < set(own) and len(face) == half - 1):
            out.append(f"witness {k + 1}: face {list(face)} is not a facet of {list(own)}")
        if body != other:
            out.append(f"witness {k + 1}: body {list(body)} is not {list(other)}")
        out += _witness_failures(c, cert.witnesses[k], f"witness {k + 1}")
    if out:
        return out
    counts = linking_counts(c, roles[0], roles[1])
    if counts != (1, 1):
        out.append(f"recomputed piercing counts {counts} are not (1, 1)")
    if cert.piercing_counts is not None and tuple(cert.piercing_counts) != counts:
        out.append(f"recorded piercing counts {tuple(cert.piercing_counts)} differ from {counts}")
    return out


def verify_certificate(c: Configuration, r) -> bool:
    return not certificate_failures(c, r)
