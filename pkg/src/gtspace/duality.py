"""Dual spaces and closed spaces induced by a bijection between opens and closed sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    ONE,
    Space,
    SubspaceWitness,
    check_subspace_witness,
    column_max,
    column_min,
)
from .errors import DimensionMismatch, IncompatibleWitness, NotABijection
from .report import PropertyReport

CLOSED_SUFFIX = "^c"


def dual(space: Space) -> Space:
    """Transpose: opens become points and points become opens."""
    matrix = tuple(zip(*space.matrix)) if space.n_points else tuple(
        () for _ in range(space.n_opens)
    )
    return Space(space.open_labels, space.point_labels, matrix, "dual")


def _as_bijection(phi: Sequence[int], n: int) -> tuple:
    phi = tuple(phi)
    if len(phi) != n:
        raise DimensionMismatch(f"bijection has length {len(phi)}, expected {n}")
    if sorted(phi) != list(range(n)):
        raise NotABijection(f"{list(phi)} is not a permutation of range({n})")
    return phi


def invert(perm: Sequence[int]) -> tuple:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


@dataclass(frozen=True)
class ClosedLink:
    """A GTS, the closed space it induces, and the bijection phi between them.

    ``phi[a]`` is the index of the closed set paired with open ``a``; the
    closed membership satisfies closed(x, phi[a]) = 1 - open(x, a).
    """

    open_space: Space
    closed_space: Space
    phi: tuple

    def __post_init__(self):
        phi = _as_bijection(self.phi, self.open_space.n_opens)
        object.__setattr__(self, "phi", phi)
        if self.closed_space.point_labels != self.open_space.point_labels:
            raise DimensionMismatch("open and closed spaces have different points")
        if self.closed_space.n_opens != self.open_space.n_opens:
            raise DimensionMismatch("closed set count differs from open count")
        for orow, crow in zip(self.open_space.matrix, self.closed_space.matrix):
            for a, k in enumerate(phi):
                if crow[k] != ONE - orow[a]:
                    raise ValueError("closed membership is not 1 - open membership under phi")

    @property
    def phi_inv(self) -> tuple:
        return invert(self.phi)


def closed_of(
    space: Space,
    closed_labels: Optional[Sequence[str]] = None,
    phi: Optional[Sequence[int]] = None,
) -> ClosedLink:
    n = space.n_opens
    phi = tuple(range(n)) if phi is None else _as_bijection(phi, n)
    phi_inv = invert(phi)
    if closed_labels is None:
        closed_labels = [space.open_labels[phi_inv[k]] + CLOSED_SUFFIX for k in range(n)]
    elif len(closed_labels) != n:
        raise DimensionMismatch(f"{len(closed_labels)} closed labels for {n} opens")
    matrix = tuple(
        tuple(ONE - row[phi_inv[k]] for k in range(n)) for row in space.matrix
    )
    closed = Space(space.point_labels, tuple(closed_labels), matrix, "closed")
    return ClosedLink(space, closed, phi)


def verify_scgts(link: ClosedLink) -> PropertyReport:
    """Check that the closed space is closed under pairwise max and min.

    Finite infima reduce to repeated binary minima, so binary witnesses
    suffice for the finite-family clause.
    """
    closed = link.closed_space
    report = PropertyReport("scgts", True)
    report.notes.append("finite inf closure checked through binary min witnesses")
    n = closed.n_opens
    for i in range(n):
        for j in range(i, n):
            ci, cj = closed.column(i), closed.column(j)
            k_max = closed.column_index.get(column_max(ci, cj))
            k_min = closed.column_index.get(column_min(ci, cj))
            entry = {"pair": (i, j), "max": k_max, "inf": k_min}
            report.witnesses.append(entry)
            if k_max is None or k_min is None:
                report.holds = False
    return report


def closed_subspace_check(
    link_a: ClosedLink, link_b: ClosedLink, witness: SubspaceWitness
) -> bool:
    """Build nu_bar = phi_b . nu . phi_a^-1 and test that it makes B-bar a subspace of A-bar.

    ``link_a`` is the larger space. Returns False for a witness that is
    well-formed but does not relate the two spaces.
    """
    sup, sub = link_a.open_space, link_b.open_space
    nu, emb = witness.nu, witness.point_embedding
    if len(nu) != sup.n_opens or len(emb) != sub.n_points:
        raise IncompatibleWitness("witness dimensions do not fit the two spaces")
    if any(not 0 <= k < sub.n_opens for k in nu):
        raise IncompatibleWitness("nu leaves the range of the subspace opens")
    if any(not 0 <= i < sup.n_points for i in emb):
        raise IncompatibleWitness("embedding leaves the range of the super points")
    phi_a_inv = link_a.phi_inv
    nu_bar = tuple(link_b.phi[nu[phi_a_inv[k]]] for k in range(sup.n_opens))
    return check_subspace_witness(
        link_b.closed_space, link_a.closed_space, SubspaceWitness(emb, nu_bar)
    )
