"""
Plain-text space documents.

    gts 1
    kind: open
    points: a b
    opens: U V
    matrix:
    a: 1 0
    b: 1/2 1

``#`` starts a comment when it opens a line or follows whitespace; blank
lines are ignored. Degrees are ``n`` or ``p/q`` with value in [0, 1].
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .core import Space, as_degree
from .errors import DimensionMismatch, GTSSyntaxError, NotAPermutation

FORMAT_VERSION = 1

_LITERAL = re.compile(r"(\d+)(?:/(\d+))?\Z")
_COMMENT = re.compile(r"(^|\s)#.*")


def _tokens(line: str):
    """Yield (column, token) pairs, columns 1-based."""
    for m in re.finditer(r"\S+", line):
        yield m.start() + 1, m.group()


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _COMMENT.sub("", raw).rstrip()
        if line.strip():
            yield lineno, line


def _parse_degree(token: str, lineno: int, col: int) -> Fraction:
    m = _LITERAL.match(token)
    if not m:
        raise GTSSyntaxError(lineno, col, f"bad degree literal {token!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise GTSSyntaxError(lineno, col, "zero denominator")
    return as_degree(Fraction(num, den))


def _field(lines, name: str, last_lineno: int):
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise GTSSyntaxError(last_lineno + 1, 1, f"expected '{name}:'") from None
    stripped = line.lstrip()
    col = len(line) - len(stripped) + 1
    if not stripped.startswith(name + ":"):
        raise GTSSyntaxError(lineno, col, f"expected '{name}:'")
    rest_col = col + len(name) + 1
    rest = line[rest_col - 1:]
    return lineno, [(rest_col + c - 1, tok) for c, tok in _tokens(rest)]


def parse_space(text: str) -> Space:
    lines = iter(list(_content_lines(text)))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GTSSyntaxError(1, 1, "empty document") from None
    toks = list(_tokens(header))
    if len(toks) != 2 or toks[0][1] != "gts":
        raise GTSSyntaxError(lineno, 1, "expected header 'gts <version>'")
    if toks[1][1] != str(FORMAT_VERSION):
        raise GTSSyntaxError(lineno, toks[1][0], f"unsupported format version {toks[1][1]!r}")

    lineno, kind_toks = _field(lines, "kind", lineno)
    if len(kind_toks) != 1 or kind_toks[0][1] not in ("open", "closed", "dual", "derived"):
        raise GTSSyntaxError(lineno, kind_toks[0][0] if kind_toks else 1, "kind must be open|closed|dual|derived")
    kind = kind_toks[0][1]

    lineno, point_toks = _field(lines, "points", lineno)
    lineno, open_toks = _field(lines, "opens", lineno)
    lineno, rest = _field(lines, "matrix", lineno)
    if rest:
        raise GTSSyntaxError(lineno, rest[0][0], "'matrix:' takes no values on its line")

    points = [t for _, t in point_toks]
    opens = [t for _, t in open_toks]
    rows = []
    for expected in points:
        try:
            lineno, line = next(lines)
        except StopIteration:
            raise DimensionMismatch(
                f"line {lineno + 1}: matrix has {len(rows)} rows, expected {len(points)}"
            ) from None
        toks = list(_tokens(line))
        col, head = toks[0]
        if not head.endswith(":") or head[:-1] != expected:
            raise GTSSyntaxError(lineno, col, f"expected row '{expected}:'")
        values = toks[1:]
        if len(values) != len(opens):
            raise DimensionMismatch(
                f"line {lineno}: row '{expected}' has {len(values)} entries, expected {len(opens)}"
            )
        rows.append(tuple(_parse_degree(tok, lineno, c) for c, tok in values))
    for lineno, line in lines:
        raise GTSSyntaxError(lineno, 1, "unexpected content after the matrix")
    return Space(tuple(points), tuple(opens), tuple(rows), kind)


def _join(prefix: str, items) -> str:
    return " ".join([prefix, *items]) if items else prefix


def serialize_space(space: Space) -> str:
    lines = [
        f"gts {FORMAT_VERSION}",
        f"kind: {space.kind}",
        _join("points:", space.point_labels),
        _join("opens:", space.open_labels),
        "matrix:",
    ]
    for label, row in zip(space.point_labels, space.matrix):
        lines.append(_join(f"{label}:", [str(v) for v in row]))
    return "\n".join(lines) + "\n"


def _check_perm(perm: Sequence[int], n: int) -> tuple:
    perm = tuple(perm)
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise NotAPermutation(f"{list(perm)} is not a permutation of range({n})")
    return perm


def relabel(space: Space, point_order: Sequence[int], open_order: Sequence[int]) -> Space:
    """Reorder points and opens; position k of the result is old index ``order[k]``."""
    po = _check_perm(point_order, space.n_points)
    oo = _check_perm(open_order, space.n_opens)
    return Space(
        tuple(space.point_labels[i] for i in po),
        tuple(space.open_labels[j] for j in oo),
        tuple(tuple(space.matrix[i][j] for j in oo) for i in po),
        space.kind,
    )


def read_space(path) -> Space:
    with open(path, encoding="utf-8") as fh:
        return parse_space(fh.read())


def write_space(space: Space, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_space(space))
