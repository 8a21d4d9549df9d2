"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or input.
Outputs without an explicit ``--out`` go to ``$GRIDEXPLORE_OUT`` when that
is set, otherwise to stdout.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from .explore import ExplorationError, ExplorationTrace, explore
from .generators import FamilyError, FamilySpec, generate
from .grid import HEX
from .oracle import DEFAULT_CEILING, TourTooLarge, optimal_tour
from .polygon import GridPolygon, PolygonError
from .render import RenderError, render_ascii, render_svg
from .textio import FormatError, parse_polygon, parse_trace, serialize_polygon, serialize_trace
from .verify import SUITES, run_suite, smart_bound

OUT_ENV = "GRIDEXPLORE_OUT"
FAMILIES = ("corridor", "honeycomb", "random", "random_holes", "thick", "comp_hex", "comp_tri")


class UsageError(Exception):
    pass


def _destination(args, default_name: str) -> Path | None:
    if args.out == "-":
        return None
    if args.out:
        return Path(args.out)
    env = os.environ.get(OUT_ENV)
    if env:
        return Path(env) / default_name
    return None


def _emit(text: str, dest: Path | None) -> None:
    if dest is None:
        sys.stdout.write(text)
        return
    dest.parent.mkdir(parents=True, exist_ok=True)
    dest.write_text(text)


def _read_polygon(path: str) -> GridPolygon:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_polygon(text)


def _read_trace(path: str) -> ExplorationTrace:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_trace(text)


def _fmt_bound(v: Fraction) -> str:
    return str(float(v))


def cmd_generate(args) -> int:
    spec = FamilySpec(
        family=args.family, kind=args.grid, width=args.width, length=args.len,
        radius=args.radius, cells=args.cells, seed=args.seed, rows=args.rows,
    )
    if args.family == "honeycomb" and args.grid != "hex":
        raise UsageError("honeycomb is a hex family")
    poly = generate(spec)
    dest = _destination(args, f"{args.family}-{poly.kind.value}-{poly.C}.poly")
    _emit(serialize_polygon(poly), dest)
    if dest is not None:
        print(f"wrote {dest}: C={poly.C}, E={poly.E}")
    return 0


def cmd_explore(args) -> int:
    poly = _read_polygon(args.polygon)
    start = tuple(args.start) if args.start else None
    trace = explore(poly, args.strategy, start)
    if args.strategy == "dfs":
        bound = Fraction(2 * poly.C - 2)
    else:
        bound = smart_bound(poly.kind, poly.C, poly.E)
    summary = f"C={poly.C}, E={poly.E}, S={trace.steps}, bound={_fmt_bound(bound)}"
    stem = Path(args.polygon).stem
    dest = _destination(args, f"{stem}.{args.strategy}.trace")
    if args.out == "-":
        _emit(serialize_trace(trace), None)
        print(summary, file=sys.stderr)
    else:
        if dest is not None:
            _emit(serialize_trace(trace), dest)
        print(summary)
    return 0


def cmd_optimal(args) -> int:
    poly = _read_polygon(args.polygon)
    start = tuple(args.start) if args.start else None
    try:
        tour = optimal_tour(poly, start, ceiling=args.exact_ceiling)
    except TourTooLarge as exc:
        raise UsageError(str(exc)) from None
    trace = ExplorationTrace(poly.kind, tour.start, tour.walk, "optimal")
    summary = f"C={poly.C}, E={poly.E}, S_opt={tour.length}, method={tour.method}"
    dest = _destination(args, f"{Path(args.polygon).stem}.optimal.trace")
    if args.out == "-":
        _emit(serialize_trace(trace), None)
        print(summary, file=sys.stderr)
    else:
        if dest is not None:
            _emit(serialize_trace(trace), dest)
        print(summary)
    return 0


def cmd_verify(args) -> int:
    fmt = args.format or "md"
    if fmt not in ("md", "csv"):
        raise UsageError("verify writes md or csv")
    if args.widen < 1:
        raise UsageError("--widen must be at least 1")
    report = run_suite(args.suite, widen=args.widen, ceiling=args.exact_ceiling)
    text = report.to_markdown() if fmt == "md" else report.to_csv()
    dest = _destination(args, f"verify-{args.suite}.{fmt}")
    _emit(text, dest)
    bad = report.failures()
    status = "PASS" if not bad else "FAIL"
    print(f"{status}: {len(report.rows)} rows, {len(bad)} failed", file=sys.stderr)
    return 0 if not bad else 1


def cmd_render(args) -> int:
    fmt = args.format or "ascii"
    if fmt not in ("ascii", "svg"):
        raise UsageError("render writes ascii or svg")
    poly = _read_polygon(args.polygon)
    trace = _read_trace(args.trace) if args.trace else None
    text = render_ascii(poly, trace) if fmt == "ascii" else render_svg(poly, trace)
    ext = "txt" if fmt == "ascii" else "svg"
    _emit(text, _destination(args, f"{Path(args.polygon).stem}.{ext}"))
    return 0


def _cell(parser):
    parser.add_argument("--start", nargs=2, type=int, metavar=("A", "B"),
                        help="start cell (default: smallest cell)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gridexplore", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    formats = ("ascii", "svg", "csv", "md")

    g = sub.add_parser("generate", help="write a polygon file")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("--grid", choices=("hex", "tri"), default=HEX.value)
    g.add_argument("--width", type=int, default=1)
    g.add_argument("--len", type=int, default=5)
    g.add_argument("--radius", type=int, default=1)
    g.add_argument("--cells", type=int, default=20)
    g.add_argument("--rows", type=int, default=1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("explore", help="run an online strategy on a polygon file")
    e.add_argument("polygon")
    e.add_argument("--strategy", choices=("smartdfs", "dfs"), default="smartdfs")
    _cell(e)
    e.add_argument("--out", help="trace file ('-' for stdout)")
    e.set_defaults(func=cmd_explore)

    o = sub.add_parser("optimal", help="exact shortest covering tour")
    o.add_argument("polygon")
    _cell(o)
    o.add_argument("--exact-ceiling", type=int, default=DEFAULT_CEILING)
    o.add_argument("--out", help="tour as a trace file ('-' for stdout)")
    o.set_defaults(func=cmd_optimal)

    v = sub.add_parser("verify", help="check the bounds over the seeded pools")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--format", choices=formats)
    v.add_argument("--widen", type=int, default=1, help="multiply the random pool sizes")
    v.add_argument("--exact-ceiling", type=int, default=DEFAULT_CEILING)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="draw a polygon and optional trace")
    r.add_argument("polygon")
    r.add_argument("--trace")
    r.add_argument("--format", choices=formats)
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, FamilyError, PolygonError, ExplorationError,
            RenderError, OverflowError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
