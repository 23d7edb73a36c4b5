"""Command-line interface.

Exit codes: 0 success, 1 validation or flip failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from typing import List, Optional

from .drawing import emit_svg
from .dynrealizer import DynRealizer
from .flips import FlipError, transform_sequence
from .oracle import OracleError, build_flip_graph
from .realizer import (
    Realizer,
    RealizerError,
    compute_realizer,
    format_realizer,
    load_realizer,
    validate_realizer,
)
from .script import format_ops, parse_script, run_dynamic, run_static
from .triangulation import ParseError, TriangulationError, parse_triangulation, random_triangulation


class _Fail(Exception):
    """Validation failure (exit 1)."""


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from None


def _is_realizer_text(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.split()[0] in ("tri", "edge")
    return False


def _load_valid_realizer(path: str) -> Realizer:
    _read(path)
    try:
        r = load_realizer(path, validate_base=False)
    except OSError as e:
        raise ParseError(str(e)) from None
    try:
        r.base.validate()
    except TriangulationError as e:
        raise _Fail(f"{path}: invalid triangulation: {e}") from None
    res = validate_realizer(r)
    if not res:
        raise _Fail(f"{path}: invalid realizer: {res.message}")
    return r


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_validate(args) -> int:
    text = _read(args.path)
    if _is_realizer_text(text):
        _load_valid_realizer(args.path)
    else:
        t = parse_triangulation(text, validate=False)
        try:
            t.validate()
        except TriangulationError as e:
            raise _Fail(f"{args.path}: invalid triangulation: {e}") from None
    print("OK")
    return 0


def cmd_realize(args) -> int:
    t = parse_triangulation(_read(args.tri), validate=False)
    try:
        t.validate()
    except TriangulationError as e:
        raise _Fail(f"{args.tri}: invalid triangulation: {e}") from None
    _write(format_realizer(compute_realizer(t)), args.output)
    return 0


def cmd_apply(args) -> int:
    r = _load_valid_realizer(args.real)
    cmds = parse_script(_read(args.script))
    out = run_static(r, cmds, emit=lambda s: print(s, file=sys.stderr if args.output is None else sys.stdout))
    _write(format_realizer(out), args.output)
    return 0


def cmd_dyn(args) -> int:
    r = _load_valid_realizer(args.real)
    cmds = parse_script(_read(args.script))
    d = DynRealizer.build(r)
    run_dynamic(d, cmds)
    if args.output is not None:
        _write(format_realizer(d.snapshot()), args.output)
    return 0


def cmd_svg(args) -> int:
    r = _load_valid_realizer(args.real)
    _write(emit_svg(r, scale=args.scale), args.out)
    return 0


def cmd_flipgraph(args) -> int:
    g = build_flip_graph(args.n)
    sys.stdout.write(g.to_csv())
    if args.dot:
        _write(g.to_dot(), args.dot)
    return 0


def cmd_distance(args) -> int:
    a = _load_valid_realizer(args.a)
    b = _load_valid_realizer(args.b)
    ops = transform_sequence(a, b)
    sys.stdout.write(f"# length {len(ops)}\n" + format_ops(ops))
    return 0


def bench_rows(sizes: List[int], ops: int, seed: int):
    """Mean cost of one random colored flip followed by a coordinate query."""
    for n in sizes:
        rng = random.Random(seed * 1000003 + n)
        d = DynRealizer.build(compute_realizer(random_triangulation(n, rng)), validate=False)
        start = time.perf_counter()
        for _ in range(ops):
            site = d.random_flip(rng)
            if site is None:
                raise FlipError(f"no flippable site found at n={n}")
            d.coordinates(site[0])
        total = time.perf_counter() - start
        yield n, ops, total * 1e3, total * 1e9 / ops


def cmd_bench(args) -> int:
    print("n,ops,total_ms,ns_per_op")
    for n, ops, ms, ns in bench_rows(args.n, args.ops, args.seed):
        print(f"{n},{ops},{ms:.1f},{ns:.0f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="schnyder", description="Realizers of planar triangulations and their flips.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a .tri or .real file")
    s.add_argument("path")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("realize", help="compute a realizer of a triangulation")
    s.add_argument("tri")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("apply", help="replay a flip script on static realizers")
    s.add_argument("real")
    s.add_argument("script")
    s.add_argument("-o", "--output", help="write the final realizer here (default stdout; queries then go to stderr)")
    s.set_defaults(func=cmd_apply)

    s = sub.add_parser("dyn", help="replay a flip script on the dynamic structure")
    s.add_argument("real")
    s.add_argument("script")
    s.add_argument("-o", "--output", help="write the final realizer here")
    s.set_defaults(func=cmd_dyn)

    s = sub.add_parser("svg", help="draw a realizer")
    s.add_argument("real")
    s.add_argument("out")
    s.add_argument("--scale", type=int, default=20)
    s.set_defaults(func=cmd_svg)

    s = sub.add_parser("flipgraph", help="colored flip graph statistics as CSV")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--dot", help="also write the graph in DOT format")
    s.set_defaults(func=cmd_flipgraph)

    s = sub.add_parser("distance", help="colored flip script between two realizers")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_distance)

    s = sub.add_parser("bench", help="time random flips with coordinate queries")
    s.add_argument("--n", type=int, nargs="+", required=True)
    s.add_argument("--ops", type=int, default=10000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_bench)
    return p


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OracleError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except _Fail as e:
        print(f"INVALID: {e}", file=sys.stderr)
        return 1
    except (FlipError, RealizerError, TriangulationError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
