"""
Finite generalized topological spaces over exact rational degrees.

A space is a triplet (X, r, A) stored as two label lists and a
|X| x |A| matrix whose entry (i, j) is the degree r(x_i, A_j) in [0, 1].
All degrees are `fractions.Fraction` so that the lattice identities the
rest of the package relies on (min/max closure, 1 - x) are exact.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import (
    DegreeOutOfRange,
    DimensionMismatch,
    DuplicateLabel,
    EmptyFamily,
    IndexOutOfRange,
    InvalidLabel,
    PointLabelNotFound,
    PointSetMismatch,
)

KINDS = ("open", "closed", "dual", "derived")

ZERO = Fraction(0)
ONE = Fraction(1)

def default_cap() -> int:
    """Carrier cap for exponential searches; ``GTS_DEFAULT_CAP`` overrides it."""
    value = os.environ.get("GTS_DEFAULT_CAP")
    return int(value) if value else 10**6


def as_degree(value) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a degree in [0, 1].

    Floats are rejected: most decimal literals have no exact binary value
    and equality of degrees must be exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"degree must be exact (int, Fraction or str), got {value!r}")
    d = Fraction(value)
    if d < 0 or d > 1:
        raise DegreeOutOfRange(f"degree {d} outside [0, 1]")
    return d


def _check_labels(labels: Sequence[str], what: str) -> tuple:
    labels = tuple(labels)
    seen = set()
    for label in labels:
        if not isinstance(label, str) or not label or any(c.isspace() for c in label):
            raise InvalidLabel(f"invalid {what} label {label!r}")
        if label.startswith("#"):
            raise InvalidLabel(f"{what} label may not start with '#': {label!r}")
        if label in seen:
            raise DuplicateLabel(f"duplicate {what} label {label!r}")
        seen.add(label)
    return labels


@dataclass(frozen=True)
class Space:
    """A finite GTS. ``kind`` is metadata and takes no part in equality."""

    point_labels: tuple
    open_labels: tuple
    matrix: tuple
    kind: str = field(default="open", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "point_labels", _check_labels(self.point_labels, "point"))
        object.__setattr__(self, "open_labels", _check_labels(self.open_labels, "open"))
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in self.matrix))
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if len(self.matrix) != len(self.point_labels):
            raise DimensionMismatch(
                f"{len(self.matrix)} rows for {len(self.point_labels)} points"
            )
        width = len(self.open_labels)
        for i, row in enumerate(self.matrix):
            if len(row) != width:
                raise DimensionMismatch(
                    f"row {i} ({self.point_labels[i]}) has {len(row)} entries, expected {width}"
                )

    @property
    def n_points(self) -> int:
        return len(self.point_labels)

    @property
    def n_opens(self) -> int:
        return len(self.open_labels)

    def row(self, i: int) -> tuple:
        return self.matrix[i]

    @cached_property
    def columns(self) -> tuple:
        return tuple(
            tuple(row[j] for row in self.matrix) for j in range(self.n_opens)
        )

    def column(self, j: int) -> tuple:
        return self.columns[j]

    @cached_property
    def column_index(self) -> dict:
        """Map each distinct column to the least index carrying it."""
        index = {}
        for j, col in enumerate(self.columns):
            index.setdefault(col, j)
        return index

    def point_index(self, label: str) -> int:
        try:
            return self.point_labels.index(label)
        except ValueError:
            raise PointLabelNotFound(label) from None

    def open_index(self, label: str) -> int:
        try:
            return self.open_labels.index(label)
        except ValueError:
            raise IndexOutOfRange(f"no open labelled {label!r}") from None

    def with_kind(self, kind: str) -> "Space":
        return Space(self.point_labels, self.open_labels, self.matrix, kind)

    def __repr__(self):
        return (
            f"Space(kind={self.kind!r}, points={list(self.point_labels)}, "
            f"opens={list(self.open_labels)})"
        )


def new_space(point_labels: Iterable[str], open_labels: Iterable[str], matrix, kind: str = "open") -> Space:
    """Build a validated space, normalising every entry to a Fraction."""
    point_labels = tuple(point_labels)
    open_labels = tuple(open_labels)
    rows = tuple(tuple(as_degree(v) for v in row) for row in matrix)
    return Space(point_labels, open_labels, rows, kind)


def _check_point(space: Space, i: int):
    if not 0 <= i < space.n_points:
        raise IndexOutOfRange(f"point index {i} out of range for {space.n_points} points")


def _check_open(space: Space, j: int):
    if not 0 <= j < space.n_opens:
        raise IndexOutOfRange(f"open index {j} out of range for {space.n_opens} opens")


def degree(space: Space, point: int, set_: int) -> Fraction:
    _check_point(space, point)
    _check_open(space, set_)
    return space.matrix[point][set_]


@dataclass(frozen=True)
class SetRef:
    """An open set of a space, or a closed set when the space is a closed one.

    A closed space already stores the closed membership, so comparisons
    read its columns directly.
    """

    space: Space
    index: int
    polarity: Optional[str] = None

    def __post_init__(self):
        _check_open(self.space, self.index)
        if self.polarity is None:
            object.__setattr__(
                self, "polarity", "closed" if self.space.kind == "closed" else "open"
            )
        elif self.polarity not in ("open", "closed"):
            raise ValueError(f"polarity must be 'open' or 'closed', not {self.polarity!r}")

    @property
    def column(self) -> tuple:
        return self.space.column(self.index)


@dataclass(frozen=True)
class OpenFamily:
    """A finite indexed family of opens of one space; repeats are allowed."""

    space: Space
    indices: tuple

    def __post_init__(self):
        indices = tuple(self.indices)
        if not indices:
            raise EmptyFamily("an open family needs at least one member")
        for j in indices:
            _check_open(self.space, j)
        object.__setattr__(self, "indices", indices)

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


@dataclass(frozen=True)
class SubspaceWitness:
    point_embedding: tuple  # sub point index -> super point index
    nu: tuple  # super open index -> sub open index


def _same_points(a: SetRef, b: SetRef):
    if a.space.point_labels != b.space.point_labels:
        raise PointSetMismatch(
            f"{list(a.space.point_labels)} != {list(b.space.point_labels)}"
        )


def sets_equal(a: SetRef, b: SetRef) -> bool:
    _same_points(a, b)
    return a.column == b.column


def is_subset(a: SetRef, b: SetRef) -> bool:
    _same_points(a, b)
    return all(u <= v for u, v in zip(a.column, b.column))


def column_min(*cols) -> tuple:
    return tuple(min(vals) for vals in zip(*cols))


def column_max(*cols) -> tuple:
    return tuple(max(vals) for vals in zip(*cols))


def intersection_witness(space: Space, i: int, j: int) -> Optional[int]:
    _check_open(space, i)
    _check_open(space, j)
    target = column_min(space.column(i), space.column(j))
    return space.column_index.get(target)


def union_witness(family: OpenFamily) -> Optional[int]:
    space = family.space
    target = column_max(*(space.column(j) for j in family))
    return space.column_index.get(target)


def restrict_column(col: tuple, embedding: Sequence[int]) -> tuple:
    return tuple(col[i] for i in embedding)


def find_subspace_witness(sub: Space, sup: Space) -> Optional[SubspaceWitness]:
    """Search for a surjection nu: opens(sup) -> opens(sub) with matching columns on Y.

    Opens of `sup` are grouped by their column restricted to the sub's
    points. Within a group, nu can only land on sub-opens carrying that
    same column, so nu exists iff every restricted column occurs in `sub`
    and each column class of `sub` has no more members than the matching
    class of `sup`. The lexicographically least nu is assigned greedily:
    each super-open takes the smallest candidate that still leaves enough
    super-opens to cover the remaining sub-opens of its class.
    """
    embedding = tuple(sup.point_index(label) for label in sub.point_labels)

    sub_classes: dict = {}
    for k, col in enumerate(sub.columns):
        sub_classes.setdefault(col, []).append(k)
    restricted = [restrict_column(col, embedding) for col in sup.columns]

    sup_classes: dict = {}
    for j, col in enumerate(restricted):
        if col not in sub_classes:
            return None
        sup_classes.setdefault(col, []).append(j)
    for col, members in sub_classes.items():
        if len(members) > len(sup_classes.get(col, ())):
            return None

    nu = [None] * sup.n_opens
    for col, sup_members in sup_classes.items():
        candidates = sub_classes[col]
        uncovered = set(candidates)
        for pos, j in enumerate(sup_members):
            remaining = len(sup_members) - pos - 1
            for k in candidates:
                if len(uncovered - {k}) <= remaining:
                    nu[j] = k
                    uncovered.discard(k)
                    break
    return SubspaceWitness(embedding, tuple(nu))


def check_subspace_witness(sub: Space, sup: Space, witness: SubspaceWitness) -> bool:
    """True iff `witness` proves `sub` is a subspace of `sup`."""
    emb, nu = witness.point_embedding, witness.nu
    if len(emb) != sub.n_points or len(nu) != sup.n_opens:
        return False
    if any(not 0 <= i < sup.n_points for i in emb) or len(set(emb)) != len(emb):
        return False
    if any(sub.point_labels[k] != sup.point_labels[i] for k, i in enumerate(emb)):
        return False
    if any(not 0 <= k < sub.n_opens for k in nu) or set(nu) != set(range(sub.n_opens)):
        return False
    return all(
        sup.matrix[i][a] == sub.matrix[k][nu[a]]
        for k, i in enumerate(emb)
        for a in range(sup.n_opens)
    )
