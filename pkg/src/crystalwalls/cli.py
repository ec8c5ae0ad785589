"""Command-line explorer: ``crystalwalls {graph,act,check,mult,render}``.

Exit status is 0 on success, 1 when a verification fails (or the node cap
is hit) and 2 on usage or literal errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from .cartan import INDICES, fundamental_weight
from .crystal import (
    CapacityError,
    TensorModel,
    build_graph,
    check_axioms,
    check_root_isomorphism,
    multiplicity_table,
    root_coordinates,
)
from .paths import LiteralError, PathModel, check_shift_decomposition, format_path, parse_path
from .perfect import B_MODEL, BElem, check_perfect
from .walls import WallModel, format_wall, is_proper, is_reduced, parse_wall, read_wall, render, validate_wall

TENSOR_ROOT = (BElem.B12, BElem.B12)


class UsageError(Exception):
    pass


def make_model(name: str, ground: int):
    if name == "wall":
        m = WallModel(ground)
        return m, m.root()
    if name == "path":
        m = PathModel(ground)
        return m, m.root()
    if name == "b":
        return B_MODEL, BElem.B12
    if name == "tensor-bb":
        return TensorModel(B_MODEL, B_MODEL, name="tensor-bb"), TENSOR_ROOT
    raise UsageError(f"unknown model {name!r}")


def write_atomic(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".crystal")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def parse_state(model: str, text: str):
    if model == "wall":
        return parse_wall(text)
    if model == "path":
        return parse_path(text)
    if model == "b":
        try:
            return BElem.parse(text)
        except ValueError:
            raise LiteralError(f"unknown element {text!r}", 0) from None
    raise UsageError(f"act does not support model {model!r}")


def format_state(model: str, x) -> str:
    if model == "wall":
        return format_wall(x)
    if model == "path":
        return format_path(x)
    return x.value


# ---------------------------------------------------------------------------


def run_graph(args) -> int:
    model, root = make_model(args.model, args.ground)
    ground = args.ground if args.model in ("wall", "path") else None
    try:
        g = build_graph(model, root, args.depth, ground=ground, node_cap=args.node_cap)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    write_atomic(args.out, g.to_json() if args.format == "json" else g.to_dot())
    return 0


def run_act(args) -> int:
    x = parse_state(args.model, args.state)
    op = args.op
    if len(op) != 2 or op[0] not in "ef" or op[1] not in "012":
        raise UsageError(f"operator must look like f0 or e2, got {op!r}")
    model, _ = make_model(args.model, getattr(x, "ground", 0))
    i = int(op[1])
    y = model.f(i, x) if op[0] == "f" else model.e(i, x)
    print("null" if y is None else format_state(args.model, y))
    return 0


def _summary(name: str, ok: bool, detail: str) -> int:
    print(f"{name}: {'PASS' if ok else 'FAIL'} ({detail})")
    return 0 if ok else 1


def run_check(args) -> int:
    suite = args.suite
    grounds = INDICES if args.ground is None else (args.ground,)
    if suite == "perfect":
        report = check_perfect(1)
        detail = f"B^min = {[b.value for b in report.b_min]}"
        if not report.ok:
            detail += "; " + "; ".join(report.failures)
        return _summary("perfect", report.ok, detail)
    status = 0
    for g in grounds:
        if suite == "axioms":
            model, root = make_model(args.model, g)
            graph = build_graph(model, root, args.depth)
            bad = check_axioms(graph, model)
            detail = f"{args.model} ground {g} depth {args.depth}: {len(graph)} nodes, {len(bad)} violations"
            if bad:
                detail += f"; first: {bad[0]}"
            status |= _summary("axioms", not bad, detail)
        elif suite == "iso":
            wm, pm = WallModel(g), PathModel(g)
            gw = build_graph(wm, wm.root(), args.depth)
            gp = build_graph(pm, pm.root(), args.depth)
            report = check_root_isomorphism(gp, gw, pm, wm)
            ok = report.ok and all(
                read_wall(gw.elements[b]) == gp.elements[a] for a, b in report.mapping.items())
            detail = f"ground {g} depth {args.depth}: {len(gp)} paths, {len(gw)} walls"
            if not report.ok:
                detail += f"; {report.mismatch}"
            elif not ok:
                detail += "; read_wall is not the witnessing bijection"
            status |= _summary("iso", ok, detail)
        elif suite == "theorem43":
            report = check_shift_decomposition(g, args.depth)
            detail = f"ground {g} depth {args.depth}: {report.checked} paths"
            if report.mismatches:
                detail += f"; first: {report.mismatches[0]}"
            status |= _summary("theorem43", report.ok, detail)
        elif suite == "reduced":
            wm = WallModel(g)
            graph = build_graph(wm, wm.root(), args.depth)
            bad = [w for w in graph.elements
                   if validate_wall(w) or not is_proper(w) or not is_reduced(w)]
            detail = f"ground {g} depth {args.depth}: {len(graph)} walls"
            if bad:
                detail += f"; first: {format_wall(bad[0])}"
            status |= _summary("reduced", not bad, detail)
    return status


def weight_label(ground: int, m: tuple[int, int, int]) -> str:
    k = min(m[0], m[1] // 2, m[2])
    rest = (m[0] - k, m[1] - 2 * k, m[2] - k)
    text = f"Λ{ground}"
    if k:
        text += f"−{'' if k == 1 else k}δ"
    for i, c in enumerate(rest):
        if c:
            text += f"−{'' if c == 1 else c}α{i}"
    return text


def run_mult(args) -> int:
    wm = WallModel(args.ground)
    graph = build_graph(wm, wm.root(), args.depth)
    top = fundamental_weight(args.ground)
    for row in multiplicity_table(graph, affine=True):
        label = weight_label(args.ground, root_coordinates(top - row.weight))
        flag = "" if row.stable else "  (may grow with depth)"
        print(f"{label} → {row.count}{flag}")
    return 0


def run_render(args) -> int:
    print(render(parse_wall(args.state)))
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crystalwalls", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="generate a crystal graph to a given depth")
    p.add_argument("--model", choices=["wall", "path", "b", "tensor-bb"], required=True)
    p.add_argument("--ground", type=int, choices=INDICES, default=0)
    p.add_argument("--depth", type=_nonneg, required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--node-cap", type=int, default=10**6)
    p.set_defaults(func=run_graph)

    p = sub.add_parser("act", help="apply one Kashiwara operator to a literal")
    p.add_argument("--model", choices=["wall", "path", "b"], required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--op", required=True)
    p.set_defaults(func=run_act)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("--suite", choices=["axioms", "perfect", "iso", "theorem43", "reduced"],
                   required=True)
    p.add_argument("--model", choices=["wall", "path", "b", "tensor-bb"], default="wall")
    p.add_argument("--ground", type=int, choices=INDICES, default=None)
    p.add_argument("--depth", type=_nonneg, default=8)
    p.set_defaults(func=run_check)

    p = sub.add_parser("mult", help="weight multiplicity table of a wall crystal")
    p.add_argument("--ground", type=int, choices=INDICES, default=0)
    p.add_argument("--depth", type=_nonneg, default=8)
    p.set_defaults(func=run_mult)

    p = sub.add_parser("render", help="draw a wall literal as ASCII")
    p.add_argument("--state", required=True)
    p.set_defaults(func=run_render)
    return parser


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LiteralError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
