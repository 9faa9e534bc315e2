"""Point-set text files and JSON result documents.

Point-set file::

    # comment lines start with '#'
    3 6            <- dimension n and point count n+3
    1 1 1          <- one point per line, n rationals
    2 4 8
    ...

Coordinates are integers ``p``, fractions ``p/q`` or plain decimals
``-1.25`` (read exactly).  Exponent notation is rejected.  Result documents
store every rational as a ``"p/q"`` or ``"p"`` string.
"""
from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction
from typing import Any, Dict

from .configuration import Configuration
from .oracle import EnumerationReport
from .sweep import PartitionResult
from .verify import Certificate, Witness

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")
_DECIMAL = re.compile(r"^[+-]?(\d+\.\d*|\.\d+)$")


class FormatError(ValueError):
    """Input text does not follow the point-set or result grammar."""


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if _RATIONAL.match(text) or _DECIMAL.match(text):
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise FormatError(f"zero denominator in {text!r}") from None
    raise FormatError(f"not an exact rational: {text!r}")


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def parse_points(text: str) -> Configuration:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            lines.append((lineno, stripped.split()))
    if not lines:
        raise FormatError("empty point file")
    lineno, header = lines[0]
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise FormatError(f"line {lineno}: header must be 'n count', got {' '.join(header)!r}")
    n, count = int(header[0]), int(header[1])
    if n < 1 or count != n + 3:
        raise FormatError(f"line {lineno}: need n >= 1 and count = n+3, got n={n} count={count}")
    rows = lines[1:]
    if len(rows) != count:
        raise FormatError(f"expected {count} point rows, found {len(rows)}")
    points = []
    for lineno, fields in rows:
        if len(fields) != n:
            raise FormatError(f"line {lineno}: expected {n} coordinates, got {len(fields)}")
        try:
            points.append(tuple(parse_rational(f) for f in fields))
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    return Configuration(n, tuple(points))


def format_points(c: Configuration, comment: str = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{c.n} {c.size}")
    out.extend(" ".join(format_rational(x) for x in p) for p in c.points)
    return "\n".join(out) + "\n"


def input_hash(c: Configuration) -> str:
    return hashlib.sha256(format_points(c).encode()).hexdigest()


def _rats(xs):
    return [format_rational(x) for x in xs]


def witness_to_json(w: Witness) -> Dict[str, Any]:
    return {
        "point": _rats(w.point),
        "face": list(w.face),
        "face_coeffs": _rats(w.face_coeffs),
        "body": list(w.body),
        "body_coeffs": _rats(w.body_coeffs),
    }


def certificate_to_json(cert: Certificate) -> Dict[str, Any]:
    doc = {"kind": cert.kind, "witnesses": [witness_to_json(w) for w in cert.witnesses]}
    if cert.roles is not None:
        doc["roles"] = [list(r) for r in cert.roles]
    if cert.piercing_counts is not None:
        doc["piercing_counts"] = list(cert.piercing_counts)
    return doc


def result_document(c: Configuration, r: PartitionResult, verdict: bool) -> Dict[str, Any]:
    return {
        "input_sha256": input_hash(c),
        "n": c.n,
        "case": r.parity,
        "subsets": [list(r.first), list(r.second)],
        "certificate": certificate_to_json(r.certificate),
        "verdict": "pass" if verdict else "fail",
    }


def enumeration_document(c: Configuration, report: EnumerationReport) -> Dict[str, Any]:
    return {
        "input_sha256": input_hash(c),
        "n": c.n,
        "case": report.case,
        "tested": report.tested,
        "count": report.count,
        "parity": report.parity,
        "pairs": [[list(a), list(b)] for a, b in report.pairs],
    }


def _index_list(value, what):
    if not isinstance(value, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in value):
        raise FormatError(f"{what} must be a list of integers")
    return tuple(value)


def _rational_list(value, what):
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise FormatError(f"{what} must be a list of rational strings")
    return tuple(parse_rational(x) for x in value)


def result_from_json(doc: Dict[str, Any]) -> PartitionResult:
    try:
        first, second = (_index_list(s, "subset") for s in doc["subsets"])
        cdoc = doc["certificate"]
        witnesses = tuple(
            Witness(
                _rational_list(w["point"], "point"),
                _index_list(w["face"], "face"),
                _rational_list(w["face_coeffs"], "face_coeffs"),
                _index_list(w["body"], "body"),
                _rational_list(w["body_coeffs"], "body_coeffs"),
            )
            for w in cdoc["witnesses"]
        )
        roles = cdoc.get("roles")
        if roles is not None:
            roles = tuple(_index_list(r, "role") for r in roles)
        counts = cdoc.get("piercing_counts")
        if counts is not None:
            counts = tuple(_index_list(counts, "piercing_counts"))
        cert = Certificate(cdoc["kind"], witnesses, roles, counts)
        return PartitionResult(doc["case"], first, second, cert)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"malformed result document: {exc!r}") from None


def dumps(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
