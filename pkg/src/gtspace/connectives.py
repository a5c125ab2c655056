"""
Linear-logic connectives as operations producing new spaces.

Label scheme (deterministic, whitespace-free so documents round-trip):

* function points render their graph by index, ``f[0→1,1→0]``
* Cartesian pairs render as ``(l,r)``
* direct-sum members render as ``inl(l)`` / ``inr(r)``
"""

from __future__ import annotations

import itertools
from typing import Optional

from .core import Space, default_cap
from .duality import ClosedLink, closed_of, dual
from .errors import SearchSpaceTooLarge
from .morphisms import adjoint_candidates, find_isomorphism
from .report import PropertyReport


def function_label(graph) -> str:
    return "f[" + ",".join(f"{i}→{j}" for i, j in enumerate(graph)) + "]"


def pair_label(left: str, right: str) -> str:
    return f"({left},{right})"


def inl(label: str) -> str:
    return f"inl({label})"


def inr(label: str) -> str:
    return f"inr({label})"


def _guard(size: int, cap: Optional[int]):
    cap = default_cap() if cap is None else cap
    if size > cap:
        raise SearchSpaceTooLarge(size, cap)


def functions(domain_size: int, codomain_size: int):
    """All maps range(domain_size) -> range(codomain_size), lexicographically."""
    return itertools.product(range(codomain_size), repeat=domain_size)


def limp(a: Space, b: Space, cap: Optional[int] = None, restricted: bool = False) -> Space:
    """Linear implication a ⊸ b, the pointwise topology on functions X -> Y.

    Points are all functions f: X -> Y (or, with ``restricted``, only those
    admitting an adjoint so that (f, f_bar) is continuous); opens are pairs
    (x, B); the degree of f in (x, B) is s(f(x), B).
    """
    nx, ny = a.n_points, b.n_points
    _guard(ny**nx, cap)
    graphs = list(functions(nx, ny))
    if restricted:
        graphs = [g for g in graphs if adjoint_candidates(a, b, g) is not None]
    opens = [(x, j) for x in range(nx) for j in range(b.n_opens)]
    matrix = tuple(
        tuple(b.matrix[g[x]][j] for x, j in opens) for g in graphs
    )
    return Space(
        tuple(function_label(g) for g in graphs),
        tuple(pair_label(a.point_labels[x], b.open_labels[j]) for x, j in opens),
        matrix,
        "derived",
    )


def tensor(a: Space, b: Space, cap: Optional[int] = None, check: bool = True) -> Space:
    """Tensor product a ⊗ b: points (x, y), opens f: X -> opens(b), degree s(y, f(x)).

    With ``check`` the result is compared against dual(a ⊸ dual(b)).
    """
    nx = a.n_points
    _guard(b.n_opens**nx, cap)
    graphs = list(functions(nx, b.n_opens))
    points = [(x, y) for x in range(nx) for y in range(b.n_points)]
    matrix = tuple(tuple(b.matrix[y][g[x]] for g in graphs) for x, y in points)
    out = Space(
        tuple(pair_label(a.point_labels[x], b.point_labels[y]) for x, y in points),
        tuple(function_label(g) for g in graphs),
        matrix,
        "derived",
    )
    if check:
        other = dual(limp(a, dual(b), cap))
        if other != out:
            raise AssertionError("tensor disagrees with dual(limp(a, dual(b)))")
    return out


def tensor_sum(a: Space, b: Space, cap: Optional[int] = None) -> Space:
    """Tensor sum a ⅋ b: points f: opens(a) -> Y, opens (A, B), degree s(f(A), B)."""
    na = a.n_opens
    _guard(b.n_points**na, cap)
    graphs = list(functions(na, b.n_points))
    opens = [(i, j) for i in range(na) for j in range(b.n_opens)]
    matrix = tuple(tuple(b.matrix[g[i]][j] for i, j in opens) for g in graphs)
    return Space(
        tuple(function_label(g) for g in graphs),
        tuple(pair_label(a.open_labels[i], b.open_labels[j]) for i, j in opens),
        matrix,
        "derived",
    )


def sum(a: Space, b: Space) -> Space:  # noqa: A001 - mirrors the connective's name
    """Topological sum a ⊕ b on X + Y with opens pairs (A, B).

    A left point reads its degree from A, a right point from B.
    """
    opens = [(i, j) for i in range(a.n_opens) for j in range(b.n_opens)]
    rows = [tuple(row[i] for i, _ in opens) for row in a.matrix]
    rows += [tuple(row[j] for _, j in opens) for row in b.matrix]
    return Space(
        tuple(inl(p) for p in a.point_labels) + tuple(inr(p) for p in b.point_labels),
        tuple(pair_label(a.open_labels[i], b.open_labels[j]) for i, j in opens),
        tuple(rows),
        "derived",
    )


def product(a: Space, b: Space) -> Space:
    """Topological product on X x Y with opens the direct sum of the open sets."""
    points = [(x, y) for x in range(a.n_points) for y in range(b.n_points)]
    matrix = tuple(a.matrix[x] + b.matrix[y] for x, y in points)
    return Space(
        tuple(pair_label(a.point_labels[x], b.point_labels[y]) for x, y in points),
        tuple(inl(o) for o in a.open_labels) + tuple(inr(o) for o in b.open_labels),
        matrix,
        "derived",
    )


def unit_zero() -> Space:
    return Space((), ("1",), (), "derived")


def unit_top() -> Space:
    return Space(("1",), (), ((),), "derived")


def limp_closed_link(a: Space, b: Space, link_b: ClosedLink, cap: Optional[int] = None) -> ClosedLink:
    """Closed structure on a ⊸ b induced by id_X x phi_b, with labels (x, L)."""
    space = limp(a, b, cap)
    nb = b.n_opens
    phi = tuple(x * nb + link_b.phi[j] for x in range(a.n_points) for j in range(nb))
    labels = tuple(
        pair_label(a.point_labels[x], link_b.closed_space.open_labels[k])
        for x in range(a.n_points)
        for k in range(nb)
    )
    return closed_of(space, labels, phi)


def _iso_law(report, name, left, right):
    iso = find_isomorphism(left, right)
    _record(report, name, iso is not None, "" if iso else "no isomorphism found")


def _eq_law(report, name, left, right):
    _record(report, name, left == right, "" if left == right else "matrices differ")


def _record(report, name, ok, detail=""):
    report.witnesses.append({"law": name, "status": "pass" if ok else "fail", "detail": detail})
    if not ok:
        report.holds = False


def verify_identities(
    a: Space,
    b: Space,
    cap: Optional[int] = None,
    link_a: Optional[ClosedLink] = None,
    link_b: Optional[ClosedLink] = None,
) -> PropertyReport:
    """Run every algebraic law of the connectives on the operands (a, b).

    A law whose carrier exceeds ``cap`` is recorded as ``skipped`` and
    does not fail the report.
    """
    report = PropertyReport("identities", True)
    zero, top = unit_zero(), unit_top()
    link_a = link_a or closed_of(a)
    link_b = link_b or closed_of(b)

    for label, s in (("a", a), ("b", b)):
        _iso_law(report, f"sum_right_unit[{label}]", sum(s, zero), s)
        _iso_law(report, f"sum_left_unit[{label}]", sum(zero, s), s)
        _iso_law(report, f"product_right_unit[{label}]", product(s, top), s)
        _iso_law(report, f"product_left_unit[{label}]", product(top, s), s)
    _eq_law(report, "top_is_dual_zero", dual(zero), top)

    de_morgan = dual(product(dual(a), dual(b)))
    _eq_law(report, "de_morgan_matrix", sum(a, b), de_morgan)
    _iso_law(report, "de_morgan_iso", sum(a, b), de_morgan)

    def guarded(name, fn):
        try:
            fn()
        except SearchSpaceTooLarge as exc:
            report.witnesses.append({"law": name, "status": "skipped", "detail": str(exc)})

    guarded(
        "tensor_is_dual_limp",
        lambda: _eq_law(
            report, "tensor_is_dual_limp",
            tensor(a, b, cap, check=False), dual(limp(a, dual(b), cap)),
        ),
    )
    guarded(
        "tensor_sum_is_limp",
        lambda: _eq_law(report, "tensor_sum_is_limp", tensor_sum(a, b, cap), limp(dual(a), b, cap)),
    )

    def closed_limp_law():
        link = limp_closed_link(a, b, link_b, cap)
        closed_ab = link.closed_space
        right = limp(link_a.closed_space, link_b.closed_space, cap)
        graphs = list(functions(a.n_points, b.n_points))
        nb = b.n_opens
        ok = all(
            closed_ab.matrix[fi][x * nb + k] == link_b.closed_space.matrix[g[x]][k]
            for fi, g in enumerate(graphs)
            for x in range(a.n_points)
            for k in range(nb)
        )
        _record(report, "closed_limp_entries", ok, "" if ok else "entry identity fails")
        _eq_law(report, "closed_limp_matrix", closed_ab, right)
        _iso_law(report, "closed_limp_iso", closed_ab, right)

    guarded("closed_limp", closed_limp_law)
    return report
