"""Command line interface: ``gtspace <command> ...``.

Exit status is 0 when the queried property holds or the construction
succeeds, 1 when a property fails or a search comes back empty, and 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import connectives, properties
from .core import OpenFamily, default_cap, find_subspace_witness
from .duality import closed_of, dual
from .errors import GTSError
from .generate import random_sgts, random_space
from .morphisms import find_isomorphism
from .textio import parse_space, read_space, serialize_space


class Output:
    def __init__(self, structured: bool):
        self.structured = structured

    def emit(self, command: str, ok: bool, text: str = "", **data):
        if self.structured:
            print(json.dumps({"command": command, "ok": ok, **data}, ensure_ascii=False))
        elif text:
            print(text, end="" if text.endswith("\n") else "\n")
        return 0 if ok else 1


def _write(space, out):
    text = serialize_space(space)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def _report_text(report) -> str:
    lines = [f"{report.property}: {'holds' if report.holds else 'fails'}"]
    lines += [f"  note: {n}" for n in report.notes]
    lines += [f"  witness: {json.dumps(w, ensure_ascii=False)}" for w in report.to_dict()["witnesses"]]
    return "\n".join(lines)


def cmd_check(args, out):
    space = read_space(args.file)
    check = properties.PROPERTIES[args.property]
    report = check(space)
    return out.emit("check", report.holds, _report_text(report), report=report.to_dict())


def _read_phi(path, space):
    """Lines '<open label> <closed label>'; line order fixes the closed-set order."""
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                open_label, closed_label = line.split()
                pairs.append((space.open_index(open_label), closed_label))
    phi = [None] * space.n_opens
    for k, (a, _) in enumerate(pairs):
        if phi[a] is not None:
            raise GTSError(f"open {space.open_labels[a]!r} listed twice in phi file")
        phi[a] = k
    if None in phi:
        raise GTSError("phi file does not list every open")
    return closed_of(space, [c for _, c in pairs], phi)


def cmd_check_regular(args, out):
    space = read_space(args.file)
    link = _read_phi(args.phi, space) if args.phi else closed_of(space)
    report = properties.check_regular(link, literal=args.literal)
    return out.emit("check-regular", report.holds, _report_text(report), report=report.to_dict())


UNARY = {"dual": dual, "closed": lambda s: closed_of(s).closed_space}
BINARY = {
    "limp": lambda a, b, cap: connectives.limp(a, b, cap),
    "tensor": lambda a, b, cap: connectives.tensor(a, b, cap),
    "tsum": lambda a, b, cap: connectives.tensor_sum(a, b, cap),
    "sum": lambda a, b, cap: connectives.sum(a, b),
    "product": lambda a, b, cap: connectives.product(a, b),
}


def cmd_op(args, out):
    if args.name in UNARY:
        if len(args.files) != 1:
            raise GTSError(f"'{args.name}' takes one space")
        result = UNARY[args.name](read_space(args.files[0]))
    else:
        if len(args.files) != 2:
            raise GTSError(f"'{args.name}' takes two spaces")
        a, b = (read_space(p) for p in args.files)
        result = BINARY[args.name](a, b, args.cap)
    text = _write(result, args.output)
    return out.emit(
        "op", True, "" if args.output else text,
        operation=args.name, points=result.n_points, opens=result.n_opens,
        document=None if args.output else text,
    )


def cmd_iso(args, out):
    a, b = read_space(args.a), read_space(args.b)
    iso = find_isomorphism(a, b)
    if iso is None:
        return out.emit("iso", False, "not isomorphic", isomorphism=None)
    text = f"f = {list(iso.f)}\nf_bar = {list(iso.f_bar)}"
    return out.emit("iso", True, text, isomorphism={"f": list(iso.f), "f_bar": list(iso.f_bar)})


def cmd_subspace(args, out):
    sub, sup = read_space(args.sub), read_space(args.super)
    w = find_subspace_witness(sub, sup)
    if w is None:
        return out.emit("subspace", False, "not a subspace", witness=None)
    data = {"point_embedding": list(w.point_embedding), "nu": list(w.nu)}
    return out.emit("subspace", True, f"embedding = {data['point_embedding']}\nnu = {data['nu']}", witness=data)


def _family_indices(spec, space):
    indices = []
    for tok in spec.split(","):
        tok = tok.strip()
        indices.append(int(tok) if tok.isdigit() else space.open_index(tok))
    return indices


def cmd_cover(args, out):
    space = read_space(args.file)
    family = OpenFamily(space, _family_indices(args.family, space))
    covers = properties.check_cover(family)
    if not args.minimal:
        return out.emit("cover", covers, "covers" if covers else "does not cover", covers=covers)
    sub = properties.minimal_positive_subcover(family)
    if sub is None:
        return out.emit("cover", False, "does not cover", covers=False, subcover=None)
    idx = list(sub.indices)
    return out.emit("cover", True, f"minimal subcover: {idx}", covers=True, subcover=idx)


def _law_lines(report):
    return "\n".join(f"{w['law']}: {w['status']}" + (f" ({w['detail']})" if w["detail"] else "")
                     for w in report.witnesses)


def cmd_laws(args, out):
    a, b = read_space(args.a), read_space(args.b)
    report = connectives.verify_identities(a, b, args.cap)
    return out.emit("laws", report.holds, _law_lines(report), report=report.to_dict())


def cmd_random_laws(args, out):
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.count):
        a = random_space(rng, max_points=2, max_opens=3)
        b = random_space(rng, max_points=2, max_opens=3)
        if not connectives.verify_identities(a, b, args.cap).holds:
            failures += 1
    ok = failures == 0
    return out.emit("random-laws", ok, f"{args.count - failures}/{args.count} operand pairs pass",
                    seed=args.seed, count=args.count, failures=failures)


def cmd_gen(args, out):
    rng = random.Random(args.seed)
    if args.sgts:
        space = random_sgts(rng, args.points, args.opens, min_points=args.points)
    else:
        space = random_space(rng, args.points, args.opens, args.points, args.opens)
    text = _write(space, args.output)
    return out.emit("gen", True, "" if args.output else text, seed=args.seed,
                    document=None if args.output else text)


def cmd_fmt(args, out):
    with open(args.file, encoding="utf-8") as fh:
        text = serialize_space(parse_space(fh.read()))
    if args.in_place:
        with open(args.file, "w", encoding="utf-8") as fh:
            fh.write(text)
        return out.emit("fmt", True)
    return out.emit("fmt", True, text, document=text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gtspace", description=__doc__.splitlines()[0])
    parser.add_argument("--report", action="store_true",
                        help="emit one JSON document per command instead of text")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized commands")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide a property of a space")
    p.add_argument("file")
    p.add_argument("--property", required=True, choices=["sgts", "compact", "connected", "hausdorff"])
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("check-regular", help="decide regularity relative to a bijection phi")
    p.add_argument("file")
    p.add_argument("--phi", help="file of '<open label> <closed label>' lines")
    p.add_argument("--literal", action="store_true",
                   help="require separation for every (point, closed set) pair")
    p.set_defaults(func=cmd_check_regular)

    p = sub.add_parser("op", help="build a derived space")
    p.add_argument("name", choices=sorted([*UNARY, *BINARY]))
    p.add_argument("files", nargs="+")
    p.add_argument("-o", "--output")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("iso", help="search for an isomorphism")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("subspace", help="search for a subspace witness")
    p.add_argument("sub")
    p.add_argument("super")
    p.set_defaults(func=cmd_subspace)

    p = sub.add_parser("cover", help="test a family for positive covering")
    p.add_argument("file")
    p.add_argument("--family", required=True, help="comma-separated open indices or labels (use indices for labels containing commas)")
    p.add_argument("--minimal", action="store_true")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("laws", help="verify the connective identities on two spaces")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("random-laws", help="verify the identities on seeded random operand pairs")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_random_laws)

    p = sub.add_parser("gen", help="write a seeded random space")
    p.add_argument("--points", type=int, default=3)
    p.add_argument("--opens", type=int, default=4)
    p.add_argument("--sgts", action="store_true", help="close the opens under min and max")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fmt", help="print a document in canonical form")
    p.add_argument("file")
    p.add_argument("-i", "--in-place", action="store_true")
    p.set_defaults(func=cmd_fmt)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "cap", None) is None and hasattr(args, "cap"):
        args.cap = default_cap()
    out = Output(args.report)
    try:
        return args.func(args, out)
    except (GTSError, OSError, ValueError) as exc:
        if args.report:
            print(json.dumps({"command": args.command, "ok": False, "error": str(exc),
                              "error_type": type(exc).__name__}))
        else:
            print(f"gtspace: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
