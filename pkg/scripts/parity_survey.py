"""Tabulate how many qualifying pairs random configurations have.

    python scripts/parity_survey.py --n 2 3 4 --samples 200
"""
import argparse
from collections import Counter

from radonlink.generator import random_configuration
from radonlink.oracle import enumerate_pairs
from radonlink.sweep import find_partition


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[1, 2, 3, 4])
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--bound", type=int, default=100)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    for n in args.n:
        counts, misses = Counter(), 0
        for seed in range(args.samples):
            c = random_configuration(n, seed, args.bound)
            rep = enumerate_pairs(c, jobs=args.jobs)
            r = find_partition(c)
            counts[rep.count] += 1
            misses += (r.first, r.second) not in rep.pairs
        even = sum(v for k, v in counts.items() if k % 2 == 0)
        dist = ", ".join(f"{k}:{v}" for k, v in sorted(counts.items()))
        print(f"n={n}  samples={args.samples}  counts {{{dist}}}  even-count configs={even}  sweep misses={misses}")


if __name__ == "__main__":
    main()
