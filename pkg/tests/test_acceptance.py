"""Exit criteria, one test per criterion.

Each criterion prints a single PASS/FAIL line (visible with ``pytest -s``
or by running this file directly).  All checks are exact; there are no
tolerances.
"""
import io
import json
import random
import sys
from fractions import Fraction as F
from functools import lru_cache
from itertools import combinations

import pytest

from radonlink.cli import main as cli_main
from radonlink.configuration import Configuration, check_general_position
from radonlink.errors import NotGeneralPositionError
from radonlink.formats import format_points
from radonlink.generator import moment_curve, random_affine_map, random_configuration
from radonlink.oracle import enumerate_pairs
from radonlink.sweep import compute_plane, find_even_partition, find_odd_partition, line_normals, sweep
from radonlink.verify import linked, verify_certificate
from oracles import minor_rank

CORPUS_SIZE = 200
ORACLE_SIZE = 100


@lru_cache(maxsize=None)
def corpus(n, size=CORPUS_SIZE):
    return tuple(random_configuration(n, seed) for seed in range(size))


def report(number, title, failures):
    status = "PASS" if not failures else "FAIL"
    print(f"criterion {number} [{status}] {title}" + (f": {failures[:3]}" if failures else ""))
    assert not failures, failures


def criterion_1():
    failures = []
    for n in range(1, 7):
        for seed, c in enumerate(corpus(n)):
            b = compute_plane(c)
            if minor_rank([list(b.u), list(b.v)]) != 2:
                failures.append((n, seed, "basis rank"))
            normals = [(b.u[i], b.v[i]) for i in range(n + 3)]
            if any(p == (0, 0) for p in normals):
                failures.append((n, seed, "zero normal"))
            for (a1, b1), (a2, b2) in combinations(normals, 2):
                if a1 * b2 - a2 * b1 == 0:
                    failures.append((n, seed, "proportional normals"))
            line_normals(b)
    return failures


def criterion_2():
    failures = []
    for n in range(1, 7):
        for seed, c in enumerate(corpus(n)):
            order = sweep(line_normals(compute_plane(c)))
            m = len(order.crossings)
            if m != 2 * (n + 3):
                failures.append((n, seed, "crossing count"))
            for k, cr in enumerate(order.crossings):
                if sum(s == 0 for s in cr.pattern) != 1 or cr.pattern[cr.index - 1] != 0:
                    failures.append((n, seed, k, "zeros"))
                if order.crossings[(k + n + 3) % m].pattern != tuple(-s for s in cr.pattern):
                    failures.append((n, seed, k, "antipode"))
                a, b = order.sectors[k], order.sectors[(k + 1) % m]
                if 0 in a or sum(x != y for x, y in zip(a, b)) != 1:
                    failures.append((n, seed, k, "sector step"))
    return failures


def criterion_3():
    failures = []
    for n in (2, 4, 6):
        for seed, c in enumerate(corpus(n)):
            r = find_even_partition(c)
            half = (n + 2) // 2
            w = r.certificate.witnesses[0]
            if len(r.first) != half or len(r.second) != half or set(r.first) & set(r.second):
                failures.append((n, seed, "sizes"))
            if not all(x > 0 for x in w.face_coeffs + w.body_coeffs):
                failures.append((n, seed, "positivity"))
            if not verify_certificate(c, r):
                failures.append((n, seed, "certificate"))
    return failures


def criterion_4():
    failures = []
    for n in (1, 3, 5):
        for seed, c in enumerate(corpus(n)):
            r = find_odd_partition(c)
            half = (n + 3) // 2
            if sorted(r.first + r.second) != list(range(1, n + 4)) or len(r.first) != half:
                failures.append((n, seed, "partition"))
            if not linked(c, r.first, r.second):
                failures.append((n, seed, "not linked"))
            if not verify_certificate(c, r):
                failures.append((n, seed, "certificate"))
    return failures


@lru_cache(maxsize=None)
def oracle_runs():
    runs = []
    for n in (1, 2, 3, 4):
        for seed, c in enumerate(corpus(n, ORACLE_SIZE)):
            r = find_odd_partition(c) if n % 2 else find_even_partition(c)
            runs.append((n, seed, (r.first, r.second), enumerate_pairs(c)))
    return tuple(runs)


def criterion_5():
    return [(n, seed) for n, seed, pair, rep in oracle_runs() if pair not in rep.pairs]


def criterion_6():
    failures = [(n, seed, rep.count) for n, seed, _, rep in oracle_runs() if rep.count % 2 != 1]
    # Theorem-1 and Theorem-2 shapes: 6 points in R^3, 7 points in R^4
    for n, c in ((3, moment_curve(range(1, 7))), (4, moment_curve(range(1, 8)))):
        if enumerate_pairs(c).count % 2 != 1:
            failures.append((n, "moment"))
    return failures


def criterion_7():
    failures = []
    line = moment_curve([0, 1, 2, 3])
    r = find_odd_partition(line)
    rep = enumerate_pairs(line)
    if (r.first, r.second) != ((1, 3), (2, 4)) or rep.pairs != (((1, 3), (2, 4)),) or rep.tested != 3:
        failures.append("n=1 line")
    rep = enumerate_pairs(moment_curve(range(5)))
    if (rep.count, rep.tested) != (5, 15):
        failures.append(f"pentagon count {rep.count} of {rep.tested}")
    rep = enumerate_pairs(moment_curve(range(1, 7)))
    if rep.count % 2 != 1 or ((1, 3, 5), (2, 4, 6)) not in rep.pairs:
        failures.append("n=3 moment curve")
    return failures


def _relabel_pairs(pairs, back):
    out = []
    for a, b in pairs:
        a, b = tuple(sorted(back[i] for i in a)), tuple(sorted(back[i] for i in b))
        out.append((a, b) if a < b else (b, a))
    return tuple(sorted(out))


def criterion_8():
    failures = []
    rng = random.Random(8)
    for n in (1, 2, 3):
        bases = [moment_curve(range(n + 3))] + list(corpus(n, 4))
        for bi, c in enumerate(bases):
            base = enumerate_pairs(c)
            for k in range(20):
                linear, shift = random_affine_map(n, 1000 * n + 20 * bi + k)
                image = c.affine_image(linear, shift)
                rep = enumerate_pairs(image)
                if rep.pairs != base.pairs or rep.parity != base.parity:
                    failures.append((n, bi, k, "affine"))
                r = find_odd_partition(image) if n % 2 else find_even_partition(image)
                if (r.first, r.second) not in base.pairs:
                    failures.append((n, bi, k, "affine sweep"))

                perm = list(range(1, n + 4))
                rng.shuffle(perm)
                back = {new: old for new, old in enumerate(perm, 1)}
                rep = enumerate_pairs(c.relabel(perm))
                if _relabel_pairs(rep.pairs, back) != base.pairs or rep.parity != base.parity:
                    failures.append((n, bi, k, "relabel"))
    return failures


def degenerate_inputs():
    """Twenty configurations with n+1 points in a common hyperplane."""
    rng = random.Random(2024)
    cases = []

    def flatten(n, seed, support_size, duplicate=False):
        pts = [list(p) for p in random_configuration(n, seed, bound=30).points]
        idx = rng.sample(range(n + 3), support_size)
        target, others = idx[0], idx[1:]
        if duplicate:
            pts[target] = list(pts[others[0]])
        else:
            w = [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in others[:-1]]
            w.append(1 - sum(w))
            pts[target] = [sum(wj * pts[j][k] for wj, j in zip(w, others)) for k in range(n)]
        return Configuration(n, tuple(tuple(p) for p in pts))

    cases += [flatten(2, s, 3) for s in range(5)]                # collinear triples
    cases += [flatten(3, s, 4) for s in range(5)]                # coplanar quadruples
    cases += [flatten(n, s, 2, duplicate=True) for n in (1, 2, 3) for s in range(2)]
    cases += [flatten(3, s, 3) for s in range(2)]                # collinear triple in R^3
    cases += [flatten(4, s, 5) for s in range(2)]                # five points in a 3-flat
    return cases


def first_flat_subset(c):
    """Lexicographically first (n+1)-subset spanning less than a full simplex."""
    for idx in combinations(range(1, c.n + 4), c.n + 1):
        base = c.point(idx[0])
        diffs = [[x - y for x, y in zip(c.point(i), base)] for i in idx[1:]]
        if minor_rank(diffs) < c.n:
            return idx
    return None


def criterion_9(tmp_path):
    failures = []
    cases = degenerate_inputs()
    if len(cases) != 20:
        failures.append(f"{len(cases)} cases")
    for k, c in enumerate(cases):
        expected = first_flat_subset(c)
        rep = check_general_position(c)
        if expected is None or rep.ok or rep.violation != expected:
            failures.append((k, "report", rep.violation, expected))
        try:
            compute_plane(c)
            failures.append((k, "sweep accepted degenerate input"))
        except NotGeneralPositionError as exc:
            if exc.violation != expected:
                failures.append((k, "sweep violation"))
        path = tmp_path / f"degenerate{k}.txt"
        path.write_text(format_points(c))
        for command in ("check-gp", "find"):
            out = io.StringIO()
            code = cli_main([command, str(path)], out=out)
            if code != 2 or tuple(json.loads(out.getvalue()).get("violation", ())) != expected:
                failures.append((k, command, code))
    return failures


def test_criterion_1_plane_dimension():
    report(1, "solution plane has dimension 2; line normals nonzero and distinct", criterion_1())


def test_criterion_2_sweep_structure():
    report(2, "one zero per crossing, antipodes negated, sectors differ in one sign", criterion_2())


def test_criterion_3_even_case():
    report(3, "even n in {2,4,6}: balanced crossing found and certificate verifies", criterion_3())


def test_criterion_4_odd_case():
    report(4, "odd n in {1,3,5}: linked partition found and verified", criterion_4())


def test_criterion_5_oracle_membership():
    report(5, "sweep output appears in brute-force list, n in {1,2,3,4}", criterion_5())


def test_criterion_6_parity():
    report(6, "every enumeration count is odd", criterion_6())


def test_criterion_7_worked_fixtures():
    report(7, "worked fixtures: line, pentagon, cyclic 6 points in R^3", criterion_7())


def test_criterion_8_invariance():
    report(8, "pair sets and parity invariant under affine maps and relabelings", criterion_8())


def test_criterion_9_degeneracy(tmp_path):
    report(9, "degenerate inputs rejected with violating subset, CLI exit 2", criterion_9(tmp_path))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-s", "-q"]))
