"""Command-line entry point.

Exit codes: 0 success, 2 invalid input (parse error or points not in
general position), 3 verification failure, 4 internal defect (a guaranteed
partition was not found).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .configuration import check_general_position
from .errors import CertificateError, GenerationError, NotGeneralPositionError, TheoremViolation
from .formats import (
    FormatError,
    dumps,
    enumeration_document,
    format_points,
    input_hash,
    parse_points,
    parse_rational,
    result_document,
    result_from_json,
)
from .generator import GenSpec, generate
from .oracle import DEFAULT_MAX_N, enumerate_pairs
from .sweep import find_partition
from .verify import certificate_failures

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_DEFECT = 0, 2, 3, 4


class InputError(Exception):
    pass


def _load(path):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_points(text)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _gp_document(c, report):
    doc = {"input_sha256": input_hash(c), "n": c.n, "ok": report.ok}
    if not report.ok:
        doc["violation"] = list(report.violation)
    return doc


def cmd_check_gp(args, out):
    c = _load(args.points)
    report = check_general_position(c)
    out.write(dumps(_gp_document(c, report)))
    return EXIT_OK if report.ok else EXIT_INPUT


def cmd_find(args, out):
    c = _load(args.points)
    report = check_general_position(c)
    if not report.ok:
        out.write(dumps(_gp_document(c, report)))
        return EXIT_INPUT
    r = find_partition(c)
    failures = certificate_failures(c, r)
    out.write(dumps(result_document(c, r, not failures)))
    if failures:
        print("verification failed: " + "; ".join(failures), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args, out):
    c = _load(args.points)
    try:
        doc = json.loads(Path(args.result).read_text())
        r = result_from_json(doc)
    except OSError as exc:
        raise InputError(f"cannot read {args.result}: {exc.strerror}") from None
    except (ValueError, FormatError) as exc:
        raise InputError(f"{args.result}: {exc}") from None
    report = check_general_position(c)
    if not report.ok:
        out.write(dumps(_gp_document(c, report)))
        return EXIT_INPUT
    try:
        failures = certificate_failures(c, r)
    except CertificateError as exc:
        failures = [f"malformed certificate: {exc}"]
    claimed = doc.get("input_sha256")
    if claimed is not None and claimed != input_hash(c):
        failures.insert(0, "result was produced for a different point set")
    if r.parity != c.parity:
        failures.insert(0, f"result case {r.parity!r} does not match n={c.n}")
    out.write(dumps({"input_sha256": input_hash(c), "verdict": "fail" if failures else "pass",
                     "failures": failures}))
    return EXIT_VERIFY if failures else EXIT_OK


def cmd_enumerate(args, out):
    c = _load(args.points)
    report = check_general_position(c)
    if not report.ok:
        out.write(dumps(_gp_document(c, report)))
        return EXIT_INPUT
    try:
        rep = enumerate_pairs(c, jobs=args.jobs, max_n=args.max_n)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out.write(dumps(enumeration_document(c, rep)))
    return EXIT_OK


def cmd_gen(args, out):
    try:
        if args.moment is not None:
            ts = tuple(parse_rational(t) for t in args.moment.split(","))
            spec = GenSpec(args.n, args.seed, kind="moment", params=ts)
        else:
            spec = GenSpec(args.n, args.seed, args.bound)
        c = generate(spec)
    except (ValueError, GenerationError) as exc:
        raise InputError(str(exc)) from None
    if spec.kind == "moment":
        comment = "moment curve t = " + ",".join(str(t) for t in spec.params)
    else:
        comment = f"random n={spec.n} seed={spec.seed} bound={spec.bound} (MT19937)"
    text = format_points(c, comment)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="radonlink",
        description="Intersecting and linked simplices among n+3 points in R^n, with exact certificates.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("find", help="find a partition and print a certified result document")
    s.add_argument("points")
    s.set_defaults(func=cmd_find)

    s = sub.add_parser("verify", help="re-check a result document against a point file")
    s.add_argument("points")
    s.add_argument("result")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("enumerate", help="brute-force every qualifying pair")
    s.add_argument("points")
    s.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    s.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                   help=f"refuse dimensions above this (default {DEFAULT_MAX_N})")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("gen", help="write a point file")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--bound", type=int, default=100, help="coordinates drawn from [-B, B]")
    g.add_argument("--moment", help="comma-separated increasing moment-curve parameters")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("check-gp", help="report whether the points are in general position")
    s.add_argument("points")
    s.set_defaults(func=cmd_check_gp)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotGeneralPositionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TheoremViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_DEFECT


if __name__ == "__main__":
    sys.exit(main())
