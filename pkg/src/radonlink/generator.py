"""Test configurations: seeded random integer points and moment-curve points.

Random configurations use Python's ``random.Random`` (MT19937) seeded with
the given integer; coordinates are drawn with ``randint(-bound, bound)``
point by point, coordinate by coordinate.  The whole set is redrawn until
it is in general position.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .configuration import Configuration, check_general_position
from .errors import GenerationError
from .exact_linalg import determinant

MAX_TRIES = 1000


@dataclass(frozen=True)
class GenSpec:
    n: int
    seed: int = 0
    bound: int = 100
    kind: str = "random"
    params: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension must be positive, got {self.n}")
        if self.kind not in ("random", "moment"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.kind == "moment":
            if self.params is None:
                object.__setattr__(self, "params", tuple(Fraction(t) for t in range(self.n + 3)))
            ts = tuple(Fraction(t) for t in self.params)
            if len(ts) != self.n + 3:
                raise ValueError(f"moment curve needs {self.n + 3} parameters, got {len(ts)}")
            if any(s >= t for s, t in zip(ts, ts[1:])):
                raise ValueError("moment-curve parameters must be strictly increasing")
            object.__setattr__(self, "params", ts)


def gen_random(spec: GenSpec, max_tries: int = MAX_TRIES) -> Configuration:
    if spec.kind != "random":
        raise ValueError(f"gen_random got a {spec.kind!r} spec")
    rng = random.Random(spec.seed)
    for _ in range(max_tries):
        pts = tuple(
            tuple(Fraction(rng.randint(-spec.bound, spec.bound)) for _ in range(spec.n))
            for _ in range(spec.n + 3)
        )
        c = Configuration(spec.n, pts)
        if check_general_position(c).ok:
            return c
    raise GenerationError(
        f"no general-position configuration after {max_tries} draws "
        f"(n={spec.n}, bound={spec.bound}); increase the bound"
    )


def gen_moment_curve(spec: GenSpec) -> Configuration:
    if spec.kind != "moment":
        raise ValueError(f"gen_moment_curve got a {spec.kind!r} spec")
    return Configuration(spec.n, tuple(tuple(t**k for k in range(1, spec.n + 1)) for t in spec.params))


def generate(spec: GenSpec) -> Configuration:
    return gen_random(spec) if spec.kind == "random" else gen_moment_curve(spec)


def random_configuration(n: int, seed: int, bound: int = 100) -> Configuration:
    return gen_random(GenSpec(n, seed, bound))


def moment_curve(ts: Sequence) -> Configuration:
    return gen_moment_curve(GenSpec(len(ts) - 3, kind="moment", params=tuple(ts)))


def random_affine_map(n: int, seed: int, bound: int = 5):
    """Seeded invertible rational affine map as (matrix, shift)."""
    rng = random.Random(seed)
    while True:
        linear = [
            [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(n)]
            for _ in range(n)
        ]
        if determinant(linear) != 0:
            shift = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(n)]
            return linear, shift
