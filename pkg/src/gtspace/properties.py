"""
Decision procedures for topological properties of finite spaces.

Each check returns a `PropertyReport` whose witnesses can be re-verified
against the space by hand or by the tests.
"""

from __future__ import annotations

import itertools
from typing import Optional

from .core import (
    ZERO,
    OpenFamily,
    Space,
    default_cap,
    intersection_witness,
    new_space,
    union_witness,
)
from .duality import ClosedLink, closed_of
from .errors import SearchSpaceTooLarge
from .morphisms import ContinuousMap, adjoint_candidates, check_continuous
from .report import PropertyReport

TWO = new_space(
    ["0", "1"],
    ["{}", "{0}", "{1}", "{0,1}"],
    [[0, 1, 0, 1], [0, 0, 1, 1]],
)


def check_sgts(space: Space, require_empty_family: bool = False) -> PropertyReport:
    """Pairwise min and max closure of the open columns.

    Binary max witnesses give every finite nonempty union by induction.
    With ``require_empty_family`` the empty union (an all-zero open) must
    also be present.
    """
    report = PropertyReport("sgts", True)
    report.notes.append("finite unions follow from binary max witnesses by induction")
    n = space.n_opens
    for i in range(n):
        for j in range(i, n):
            meet = intersection_witness(space, i, j)
            if meet is None:
                report.holds = False
                report.witnesses.append({"missing": "intersection", "pair": (i, j)})
                return report
            join = union_witness(OpenFamily(space, (i, j)))
            if join is None:
                report.holds = False
                report.witnesses.append({"missing": "union", "pair": (i, j)})
                return report
    if require_empty_family:
        zero = tuple(ZERO for _ in range(space.n_points))
        if zero not in space.column_index:
            report.holds = False
            report.witnesses.append({"missing": "union", "pair": ()})
    return report


def _support(space: Space, j: int) -> int:
    mask = 0
    for i, row in enumerate(space.matrix):
        if row[j] > 0:
            mask |= 1 << i
    return mask


def check_cover(family: OpenFamily) -> bool:
    space = family.space
    full = (1 << space.n_points) - 1
    mask = 0
    for j in family:
        mask |= _support(space, j)
    return mask == full


def minimal_positive_subcover(family: OpenFamily) -> Optional[OpenFamily]:
    """Smallest subfamily that still covers every point with positive degree.

    Exact branch and bound over family positions, seeded with a greedy
    cover. Among minimum covers the lexicographically least set of
    positions wins; the result keeps family order.
    """
    space = family.space
    full = (1 << space.n_points) - 1
    members = list(family)
    masks = [_support(space, j) for j in members]
    total = 0
    for mk in masks:
        total |= mk
    if total != full:
        return None
    if full == 0:
        return OpenFamily(space, (members[0],))

    # greedy seed
    covered, greedy = 0, []
    while covered != full:
        pos = max(range(len(masks)), key=lambda p: (bin(masks[p] & ~covered).count("1"), -p))
        greedy.append(pos)
        covered |= masks[pos]
    best = sorted(greedy)
    best_size = len(best)
    found = False  # whether `best` came from the ordered search

    # suffix unions for a feasibility cut
    suffix = [0] * (len(masks) + 1)
    for p in range(len(masks) - 1, -1, -1):
        suffix[p] = suffix[p + 1] | masks[p]
    widest = max(bin(mk).count("1") for mk in masks)

    def lower_bound(uncovered: int) -> int:
        left = bin(uncovered).count("1")
        return -(-left // widest)

    chosen = []

    def dfs(pos: int, covered: int):
        nonlocal best, best_size, found
        if covered == full:
            size = len(chosen)
            if size < best_size or (size == best_size and not found and chosen < best):
                best, best_size = list(chosen), size
            if size <= best_size:
                found = True
            return
        if pos == len(masks) or (covered | suffix[pos]) != full:
            return
        limit = len(chosen) + lower_bound(full & ~covered)
        if limit > best_size or (found and limit >= best_size):
            return
        if masks[pos] & ~covered:
            chosen.append(pos)
            dfs(pos + 1, covered | masks[pos])
            chosen.pop()
        dfs(pos + 1, covered)

    dfs(0, 0)
    return OpenFamily(space, tuple(members[p] for p in best))


def check_compact(space: Space) -> PropertyReport:
    report = PropertyReport("compact", True)
    report.notes.append(
        "finite open set: every family has finite image, so it is its own finite subfamily"
    )
    if space.n_points == 0 or space.n_opens == 0:
        report.notes.append("vacuous")
    return report


def _surjections_onto_two(n: int):
    for g in itertools.product((0, 1), repeat=n):
        if 0 in g and 1 in g:
            yield g


def check_connected(space: Space, cap: Optional[int] = None) -> PropertyReport:
    """Connected iff no surjective point map g into TWO admits an adjoint g_bar."""
    n = space.n_points
    cap = default_cap() if cap is None else cap
    if 2**n > cap:
        raise SearchSpaceTooLarge(2**n, cap)
    report = PropertyReport("connected", True)
    if n < 2:
        report.notes.append("vacuous: no surjection onto 2 exists")
        return report
    for g in _surjections_onto_two(n):
        cands = adjoint_candidates(space, TWO, g)
        if cands is not None:
            g_bar = tuple(c[0] for c in cands)
            report.holds = False
            report.witnesses.append({"g": g, "g_bar": g_bar})
            return report
    return report


def _separated(space: Space, a1: int, a2: int) -> bool:
    return all(min(row[a1], row[a2]) == 0 for row in space.matrix)


def check_hausdorff(space: Space) -> PropertyReport:
    report = PropertyReport("hausdorff", True)
    n, m = space.n_points, space.n_opens
    if n < 2:
        report.notes.append("vacuous: no pair of distinct points")
    for x1 in range(n):
        for x2 in range(x1 + 1, n):
            sep = next(
                (
                    (a1, a2)
                    for a1 in range(m)
                    if space.matrix[x1][a1] > 0
                    for a2 in range(m)
                    if space.matrix[x2][a2] > 0 and _separated(space, a1, a2)
                ),
                None,
            )
            if sep is None:
                report.holds = False
                report.witnesses = [{"inseparable": (x1, x2)}]
                return report
            report.witnesses.append({"points": (x1, x2), "opens": sep})
    return report


def check_regular(link: ClosedLink, literal: bool = False) -> PropertyReport:
    """Separate each point x from each closed set K not meeting x.

    Needs opens A1, A2 with A1 positive at x, K below A2 everywhere and
    min(A1, A2) identically zero. Such a pair forces closed(x, K) = 0, so
    only pairs with closed(x, K) = 0 are examined; ``literal=True`` checks
    every (x, K) pair instead, which fails as soon as some closed set is
    positive at some point.
    """
    space, closed = link.open_space, link.closed_space
    report = PropertyReport("regular", True)
    n, m = space.n_points, space.n_opens
    skipped = 0
    for x in range(n):
        for k in range(closed.n_opens):
            kcol = closed.column(k)
            if not literal and kcol[x] != 0:
                skipped += 1
                continue
            above = [a for a in range(m) if all(u <= v for u, v in zip(kcol, space.column(a)))]
            sep = next(
                (
                    (a1, a2)
                    for a1 in range(m)
                    if space.matrix[x][a1] > 0
                    for a2 in above
                    if _separated(space, a1, a2)
                ),
                None,
            )
            if sep is None:
                report.holds = False
                report.witnesses = [{"point": x, "closed": k}]
                return report
            report.witnesses.append({"point": x, "closed": k, "opens": sep})
    if skipped:
        report.notes.append(f"{skipped} (point, closed set) pairs with positive closed degree skipped")
    if not report.witnesses:
        report.notes.append("vacuous")
    return report


PROPERTIES = {
    "sgts": check_sgts,
    "compact": check_compact,
    "connected": check_connected,
    "hausdorff": check_hausdorff,
    "regular": lambda space: check_regular(closed_of(space)),
}


def check_preserved_under_iso(prop: str, a: Space, b: Space, iso: ContinuousMap) -> bool:
    """Whether ``prop`` takes the same verdict on two isomorphic spaces."""
    check_continuous(a, b, iso.f, iso.f_bar)
    if not iso.is_isomorphism:
        raise ValueError("map is not an isomorphism")
    check = PROPERTIES[prop]
    return check(a).holds == check(b).holds
