"""
Continuous pairs (f, f_bar) between spaces and isomorphism search.

A continuous map from (X, r, A) to (Y, s, B) sends points forward and
opens backward, subject to s(f(x), B) = r(x, f_bar(B)) for all x, B.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .core import Space, default_cap
from .duality import ClosedLink
from .errors import (
    AdjointnessViolation,
    IndexOutOfRange,
    LinkMismatch,
    SearchSpaceTooLarge,
)


@dataclass(frozen=True)
class ContinuousMap:
    source: Space
    target: Space
    f: tuple
    f_bar: tuple

    @property
    def is_isomorphism(self) -> bool:
        return (
            sorted(self.f) == list(range(self.target.n_points))
            and sorted(self.f_bar) == list(range(self.source.n_opens))
        )

    def then(self, other: "ContinuousMap") -> "ContinuousMap":
        """Compose with ``other`` (applied second): (g . f, f_bar . g_bar)."""
        f = tuple(other.f[i] for i in self.f)
        f_bar = tuple(self.f_bar[j] for j in other.f_bar)
        return check_continuous(self.source, other.target, f, f_bar)

    def inverse(self) -> "ContinuousMap":
        if not self.is_isomorphism:
            raise ValueError("only isomorphisms can be inverted")
        f = [0] * len(self.f)
        for x, y in enumerate(self.f):
            f[y] = x
        f_bar = [0] * len(self.f_bar)
        for b, a in enumerate(self.f_bar):
            f_bar[a] = b
        return check_continuous(self.target, self.source, tuple(f), tuple(f_bar))


# An isomorphism is a continuous map whose two components are bijections.
Isomorphism = ContinuousMap


def check_continuous(source: Space, target: Space, f: Sequence[int], f_bar: Sequence[int]) -> ContinuousMap:
    f, f_bar = tuple(f), tuple(f_bar)
    if len(f) != source.n_points:
        raise IndexOutOfRange(f"f has {len(f)} entries for {source.n_points} points")
    if len(f_bar) != target.n_opens:
        raise IndexOutOfRange(f"f_bar has {len(f_bar)} entries for {target.n_opens} opens")
    if any(not 0 <= y < target.n_points for y in f):
        raise IndexOutOfRange("f leaves the target point range")
    if any(not 0 <= a < source.n_opens for a in f_bar):
        raise IndexOutOfRange("f_bar leaves the source open range")
    for x, y in enumerate(f):
        src_row, tgt_row = source.matrix[x], target.matrix[y]
        for b, a in enumerate(f_bar):
            if tgt_row[b] != src_row[a]:
                raise AdjointnessViolation(x, b)
    return ContinuousMap(source, target, f, f_bar)


def is_continuous(source: Space, target: Space, f, f_bar) -> bool:
    try:
        check_continuous(source, target, f, f_bar)
    except AdjointnessViolation:
        return False
    return True


def pullback_column(target: Space, f: Sequence[int], b: int) -> tuple:
    return tuple(target.matrix[y][b] for y in f)


def adjoint_candidates(source: Space, target: Space, f: Sequence[int]) -> Optional[list]:
    """For each target open, the source opens equal to its pullback along f.

    Returns None as soon as some target open has no candidate.
    """
    by_column: dict = {}
    for a, col in enumerate(source.columns):
        by_column.setdefault(col, []).append(a)
    out = []
    for b in range(target.n_opens):
        cands = by_column.get(pullback_column(target, f, b))
        if not cands:
            return None
        out.append(cands)
    return out


def _guard(size: int, cap: Optional[int]):
    cap = default_cap() if cap is None else cap
    if size > cap:
        raise SearchSpaceTooLarge(size, cap)


def iter_continuous(source: Space, target: Space, cap: Optional[int] = None) -> Iterator[ContinuousMap]:
    _guard(target.n_points ** source.n_points, cap)
    for f in itertools.product(range(target.n_points), repeat=source.n_points):
        cands = adjoint_candidates(source, target, f)
        if cands is None:
            continue
        for f_bar in itertools.product(*cands):
            yield ContinuousMap(source, target, f, f_bar)


def enumerate_continuous(source: Space, target: Space, cap: Optional[int] = None) -> list:
    """All continuous pairs in lexicographic order of (f, f_bar).

    ``cap`` bounds the number of candidate point maps f.
    """
    return list(iter_continuous(source, target, cap))


def _quick_reject(a: Space, b: Space) -> bool:
    if a.n_points != b.n_points or a.n_opens != b.n_opens:
        return True
    rows_a = Counter(tuple(sorted(r)) for r in a.matrix)
    rows_b = Counter(tuple(sorted(r)) for r in b.matrix)
    if rows_a != rows_b:
        return True
    cols_a = Counter(tuple(sorted(c)) for c in a.columns)
    cols_b = Counter(tuple(sorted(c)) for c in b.columns)
    return cols_a != cols_b


def find_isomorphism(a: Space, b: Space) -> Optional[ContinuousMap]:
    """Backtracking search for an isomorphism from `a` to `b`.

    Points of `a` are assigned in order, each to the smallest unused point
    of `b` with the same sorted row. After every assignment the opens of
    both spaces are refined by their columns restricted to the points
    placed so far; the two refinements must have equal class sizes or
    the branch is cut. When all points are placed the open bijection is
    read off greedily, which is the lexicographically least choice.
    """
    if _quick_reject(a, b):
        return None
    n, m = a.n_points, a.n_opens
    row_key_a = [tuple(sorted(r)) for r in a.matrix]
    row_key_b = [tuple(sorted(r)) for r in b.matrix]
    f = [None] * n
    used = [False] * n

    def search(x, cls_a, cls_b):
        if x == n:
            return True
        for y in range(n):
            if used[y] or row_key_a[x] != row_key_b[y]:
                continue
            ra, rb = a.matrix[x], b.matrix[y]
            codes: dict = {}
            new_a = [codes.setdefault((cls_a[j], ra[j]), len(codes)) for j in range(m)]
            new_b = []
            ok = True
            for j in range(m):
                code = codes.get((cls_b[j], rb[j]))
                if code is None:
                    ok = False
                    break
                new_b.append(code)
            if not ok or Counter(new_a) != Counter(new_b):
                continue
            f[x], used[y] = y, True
            if search(x + 1, new_a, new_b):
                return True
            f[x], used[y] = None, False
        return False

    if not search(0, [0] * m, [0] * m):
        return None
    taken = [False] * m
    f_bar = []
    for j in range(m):
        col = pullback_column(b, f, j)
        for i in range(m):
            if not taken[i] and a.column(i) == col:
                taken[i] = True
                f_bar.append(i)
                break
    return check_continuous(a, b, f, f_bar)


def induced_closed_map(m: ContinuousMap, link_source: ClosedLink, link_target: ClosedLink) -> ContinuousMap:
    """Carry (f, f_bar) over to the closed spaces as (f, phi_1 . f_bar . phi_2^-1)."""
    if link_source.open_space != m.source or link_target.open_space != m.target:
        raise LinkMismatch("closed links do not belong to the map's spaces")
    phi_2_inv = link_target.phi_inv
    f_bar_star = tuple(
        link_source.phi[m.f_bar[phi_2_inv[k]]] for k in range(m.target.n_opens)
    )
    return check_continuous(link_source.closed_space, link_target.closed_space, m.f, f_bar_star)
