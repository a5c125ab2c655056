"""Seeded random spaces for property tests and the CLI ``gen`` command."""

from __future__ import annotations

import random
from fractions import Fraction

from .core import Space, column_max, column_min

DEGREE_GRID = tuple(Fraction(s) for s in ("0", "1/4", "1/3", "1/2", "2/3", "3/4", "1"))


def _labels(prefix, n):
    return tuple(f"{prefix}{k}" for k in range(n))


def random_space(rng: random.Random, max_points=4, max_opens=6, min_points=0, min_opens=0, grid=DEGREE_GRID) -> Space:
    n = rng.randint(min_points, max_points)
    m = rng.randint(min_opens, max_opens)
    matrix = tuple(tuple(rng.choice(grid) for _ in range(m)) for _ in range(n))
    return Space(_labels("x", n), _labels("U", m), matrix)


def min_max_closure(columns) -> list:
    cols = list(dict.fromkeys(columns))
    changed = True
    while changed:
        changed = False
        for c in list(cols):
            for d in list(cols):
                for e in (column_min(c, d), column_max(c, d)):
                    if e not in cols:
                        cols.append(e)
                        changed = True
    return cols


def random_sgts(rng: random.Random, max_points=4, max_opens=6, min_points=1, grid=DEGREE_GRID) -> Space:
    """A random space closed under pairwise min and max with at most ``max_opens`` opens.

    Random generator columns are closed under min/max; closures that grow
    past ``max_opens`` are redrawn.
    """
    while True:
        n = rng.randint(min_points, max_points)
        seeds = [
            tuple(rng.choice(grid) for _ in range(n))
            for _ in range(rng.randint(1, 3))
        ]
        cols = min_max_closure(seeds)
        if len(cols) <= max_opens:
            break
    rng.shuffle(cols)
    matrix = tuple(tuple(col[i] for col in cols) for i in range(n))
    return Space(_labels("x", n), _labels("U", len(cols)), matrix)


def random_permutation(rng: random.Random, n: int) -> tuple:
    perm = list(range(n))
    rng.shuffle(perm)
    return tuple(perm)
