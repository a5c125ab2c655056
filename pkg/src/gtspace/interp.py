"""
Bridges to classical and fuzzy topology, and the subbases generated by
the pointwise (⊸) and tensor (⊗) constructions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .connectives import function_label, functions, limp, pair_label, tensor
from .core import ONE, ZERO, Space, as_degree, column_max, column_min, default_cap
from .errors import DuplicateLabel, SearchSpaceTooLarge, UnknownPointLabel
from .report import PropertyReport


def subset_label(members, order: Sequence[str]) -> str:
    """Render a subset as ``{a,b}`` with members in point order."""
    return "{" + ",".join(p for p in order if p in members) + "}"


@dataclass(frozen=True)
class ClassicalTopology:
    points: tuple
    opens: tuple  # of frozensets of point labels

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "opens", tuple(frozenset(o) for o in self.opens))

    def has_bounds(self) -> bool:
        return frozenset() in self.opens and frozenset(self.points) in self.opens

    def closed_under_pairs(self) -> bool:
        family = set(self.opens)
        return all(u & v in family and u | v in family for u in family for v in family)

    def is_topology(self) -> bool:
        return self.has_bounds() and self.closed_under_pairs()


@dataclass(frozen=True)
class FuzzySet:
    membership: dict  # point label -> degree
    name: Optional[str] = None


@dataclass
class Subbase:
    """Generators over a point list, each a (label, point label -> degree) pair."""

    points: tuple
    generators: list = field(default_factory=list)

    def as_space(self) -> Space:
        return Space(
            self.points,
            tuple(label for label, _ in self.generators),
            tuple(
                tuple(member[p] for _, member in self.generators) for p in self.points
            ),
            "derived",
        )


def from_classical(t: ClassicalTopology) -> Space:
    known = set(t.points)
    labels = []
    for o in t.opens:
        unknown = o - known
        if unknown:
            raise UnknownPointLabel(f"subset mentions unknown points {sorted(unknown)}")
        labels.append(subset_label(o, t.points))
    if len(set(labels)) != len(labels):
        raise DuplicateLabel("the same subset is listed twice")
    matrix = tuple(tuple(ONE if p in o else ZERO for o in t.opens) for p in t.points)
    return Space(t.points, tuple(labels), matrix, "open")


def export_classical(space: Space) -> Optional[ClassicalTopology]:
    if any(v not in (ZERO, ONE) for row in space.matrix for v in row):
        return None
    opens = [
        frozenset(p for p, v in zip(space.point_labels, col) if v == ONE)
        for col in space.columns
    ]
    return ClassicalTopology(space.point_labels, tuple(opens))


def from_fuzzy(points: Sequence[str], sets: Sequence[FuzzySet]) -> Space:
    points = tuple(points)
    known = set(points)
    for fs in sets:
        unknown = set(fs.membership) - known
        if unknown:
            raise UnknownPointLabel(f"fuzzy set mentions unknown points {sorted(unknown)}")
        missing = known - set(fs.membership)
        if missing:
            raise UnknownPointLabel(f"fuzzy set has no degree for {sorted(missing)}")
    labels = tuple(fs.name or f"A{k}" for k, fs in enumerate(sets))
    matrix = tuple(tuple(as_degree(fs.membership[p]) for fs in sets) for p in points)
    return Space(points, labels, matrix, "open")


def fuzzy_topology_report(space: Space) -> PropertyReport:
    """Report whether the constant opens 0 and 1 are present (they are optional)."""
    zero = tuple(ZERO for _ in range(space.n_points))
    one = tuple(ONE for _ in range(space.n_points))
    report = PropertyReport("fuzzy-bounds", True)
    for name, col in (("zero", zero), ("one", one)):
        idx = space.column_index.get(col)
        report.witnesses.append({"constant": name, "open": idx})
        if idx is None:
            report.holds = False
    return report


def pointwise_subbase(a: Space, b: Space, cap: Optional[int] = None) -> Subbase:
    """The generators <x, B> of the pointwise topology on functions X -> Y.

    Each generator is computed from the function graphs, <x, B>(f) = B(f(x)),
    and must agree with the (x, B) column of a ⊸ b.
    """
    space = limp(a, b, cap)
    graphs = list(functions(a.n_points, b.n_points))
    sub = Subbase(space.point_labels)
    for x in range(a.n_points):
        for j in range(b.n_opens):
            member = {function_label(g): b.matrix[g[x]][j] for g in graphs}
            sub.generators.append(
                (pair_label(a.point_labels[x], b.open_labels[j]), member)
            )
    if sub.as_space().matrix != space.matrix:
        raise AssertionError("pointwise subbase disagrees with the limp matrix")
    return sub


def tensor_subbase(a: Space, b: Space, cap: Optional[int] = None) -> Subbase:
    """The generators <f> on X x Y, one per f: X -> opens(b), <f>(x, y) = f(x)(y)."""
    space = tensor(a, b, cap)
    graphs = list(functions(a.n_points, b.n_opens))
    sub = Subbase(space.point_labels)
    for g in graphs:
        member = {
            pair_label(a.point_labels[x], b.point_labels[y]): b.matrix[y][g[x]]
            for x in range(a.n_points)
            for y in range(b.n_points)
        }
        sub.generators.append((function_label(g), member))
    if sub.as_space().matrix != space.matrix:
        raise AssertionError("tensor subbase disagrees with the tensor matrix")
    return sub


def generate_topology(sub: Subbase, cap: Optional[int] = None, include_bounds: bool = True) -> Space:
    """Close the generators under pairwise min and max.

    ``cap`` bounds the number of opens produced; exceeding it raises
    SearchSpaceTooLarge rather than truncating.
    """
    cap = default_cap() if cap is None else cap
    base = sub.as_space()
    cols = list(dict.fromkeys(base.columns))
    if include_bounds:
        for v in (ZERO, ONE):
            c = tuple(v for _ in sub.points)
            if c not in cols:
                cols.append(c)
    seen = set(cols)
    frontier = list(cols)
    while frontier:
        new = []
        for c in frontier:
            for d in list(cols):
                for e in (column_min(c, d), column_max(c, d)):
                    if e not in seen:
                        seen.add(e)
                        cols.append(e)
                        new.append(e)
                        if len(cols) > cap:
                            raise SearchSpaceTooLarge(len(cols), cap)
        frontier = new
    return Space(
        sub.points,
        tuple(f"U{k}" for k in range(len(cols))),
        tuple(tuple(col[i] for col in cols) for i in range(len(sub.points))),
        "derived",
    )
