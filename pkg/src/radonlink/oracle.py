"""Brute-force enumeration of every qualifying subset pair."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple

from .configuration import Configuration, require_general_position
from .errors import ParityError
from .verify import interior_intersection, linked

DEFAULT_MAX_N = 8

Pair = Tuple[Tuple[int, ...], Tuple[int, ...]]


@dataclass(frozen=True)
class EnumerationReport:
    case: str
    pairs: Tuple[Pair, ...]
    tested: int

    @property
    def count(self) -> int:
        return len(self.pairs)

    @property
    def parity(self) -> str:
        return "odd" if self.count % 2 else "even"


def odd_candidates(size: int) -> List[Pair]:
    """Unordered splits of 1..size into two halves, the half holding 1 first."""
    everything = set(range(1, size + 1))
    return [
        (a, tuple(sorted(everything - set(a))))
        for a in combinations(range(1, size + 1), size // 2)
        if a[0] == 1
    ]


def even_candidates(size: int, k: int) -> List[Pair]:
    """Unordered pairs of disjoint k-subsets of 1..size, lexicographically smaller first."""
    out = []
    for a in combinations(range(1, size + 1), k):
        rest = [i for i in range(1, size + 1) if i not in a]
        out.extend((a, b) for b in combinations(rest, k) if a < b)
    return out


def _test_odd(args) -> bool:
    c, (a, b) = args
    return linked(c, a, b)


def _test_even(args) -> bool:
    c, (a, b) = args
    return interior_intersection(c, a, b).exists


def _run(test, c: Configuration, candidates: List[Pair], jobs: int) -> Tuple[Pair, ...]:
    work = [(c, pair) for pair in candidates]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            hits = list(pool.map(test, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        hits = [test(w) for w in work]
    return tuple(sorted(pair for pair, hit in zip(candidates, hits) if hit))


def _check_ceiling(c: Configuration, max_n: int) -> None:
    if c.n > max_n:
        raise ValueError(f"enumeration limited to n <= {max_n}, got n={c.n}; raise max_n to override")


def enumerate_odd(c: Configuration, jobs: int = 1, max_n: int = DEFAULT_MAX_N) -> EnumerationReport:
    if c.n % 2 == 0:
        raise ParityError(f"linked-pair enumeration needs odd n, got n={c.n}")
    _check_ceiling(c, max_n)
    require_general_position(c)
    candidates = odd_candidates(c.size)
    return EnumerationReport("odd", _run(_test_odd, c, candidates, jobs), len(candidates))


def enumerate_even(c: Configuration, jobs: int = 1, max_n: int = DEFAULT_MAX_N) -> EnumerationReport:
    if c.n % 2:
        raise ParityError(f"intersecting-pair enumeration needs even n, got n={c.n}")
    _check_ceiling(c, max_n)
    require_general_position(c)
    candidates = even_candidates(c.size, (c.n + 2) // 2)
    return EnumerationReport("even", _run(_test_even, c, candidates, jobs), len(candidates))


def enumerate_pairs(c: Configuration, jobs: int = 1, max_n: int = DEFAULT_MAX_N) -> EnumerationReport:
    if c.n % 2:
        return enumerate_odd(c, jobs, max_n)
    return enumerate_even(c, jobs, max_n)
