"""Command-line entry point: ``epgrid construct|validate|analyze|render|sweep``.

Exit codes: 0 on success, 1 when the input is well formed but the result is
wrong (the report then goes to standard error), 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Callable, Sequence

from .bounds import MAX_BRUTE_FORCE_N, all_bounds, brute_force_pathwidth
from .constructions import epg_any_graph, pathwidth_epg
from .formats import (ParseError, parse_decomposition, parse_drawing, parse_graph,
                      parse_intervals, parse_minor, parse_representation, read_file,
                      serialize_representation)
from .graph import Graph, MinorRecipe, apply_minor
from .intervals import (IntervalRepresentation, decomposition_from_ordering,
                        decomposition_to_intervals, normalize)
from .orthogonal import orth_to_epg
from .representation import GridRepresentation, Mode, stats, validate
from .svg import RenderStyle, render_svg

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(payload: dict[str, Any], fmt: str, stream) -> None:
    if fmt == "json":
        stream.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return
    for key, value in payload.items():
        if isinstance(value, dict):
            stream.write(f"{key}:\n")
            for k, v in value.items():
                stream.write(f"  {k}: {_text_value(v)}\n")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            stream.write(f"{key}:\n")
            for item in value:
                stream.write("  - " + ", ".join(f"{k}={_text_value(v)}" for k, v in item.items())
                             + "\n")
        else:
            stream.write(f"{key}: {_text_value(value)}\n")


def _text_value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)) and v and all(isinstance(x, (list, tuple)) for x in v):
        return " ".join("-".join(str(y) for y in x) for x in v)
    if isinstance(v, (list, tuple)):
        return " ".join(_text_value(x) for x in v) if v else "[]"
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    return str(v)


def _finish(payload: dict[str, Any], ok: bool, fmt: str) -> int:
    payload = {"ok": ok, **payload}
    _emit(payload, fmt, sys.stdout if ok else sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def _pathwidth_intervals(g: Graph, args: argparse.Namespace) -> tuple[IntervalRepresentation, str]:
    if args.intervals:
        ir = read_file(args.intervals, parse_intervals)
        source = "intervals"
    elif args.decomposition:
        pd = read_file(args.decomposition, parse_decomposition)
        if not pd.covers(g):
            raise ValueError("decomposition does not cover the graph")
        return decomposition_to_intervals(pd), "decomposition"
    elif g.n <= MAX_BRUTE_FORCE_N:
        _, order = brute_force_pathwidth(g)
        return decomposition_to_intervals(decomposition_from_ordering(g, order)), "brute-force"
    else:
        raise UsageError(f"--method pathwidth needs --intervals or --decomposition when n > "
                         f"{MAX_BRUTE_FORCE_N}")
    return (ir if ir.is_normalized() else normalize(ir)), source


def build(args: argparse.Namespace) -> tuple[GridRepresentation, Graph, dict[str, Any]]:
    """Run the chosen construction; returns the representation and the graph it must match."""
    g = read_file(args.graph, parse_graph)
    info: dict[str, Any] = {"method": args.method}
    if args.method == "complete":
        return epg_any_graph(g), g, info
    if args.method == "pathwidth":
        ir, source = _pathwidth_intervals(g, args)
        info["interval_source"] = source
        return pathwidth_epg(g, ir), g, info
    if not args.drawing:
        raise UsageError("--method orthogonal needs --drawing")
    d = read_file(args.drawing, parse_drawing)
    r = read_file(args.minor, parse_minor) if args.minor else MinorRecipe()
    target = apply_minor(g, r)
    return orth_to_epg(d, g, r, open_paths=not args.closed), target, info


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        rep, target, info = build(args)
    except (ParseError, UsageError, OSError):
        raise
    except ValueError as exc:
        return _finish({"command": "construct", "error": str(exc)}, False, args.format)
    rep = rep.normalized()
    text = serialize_representation(rep)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    report = validate(rep, target)
    payload = {"command": "construct", **info, "report": report.as_dict()}
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            _emit({"ok": report.exact, **payload}, args.format, fh)
    if not args.out and report.exact:
        sys.stdout.write(text)
        return EXIT_OK
    return _finish(payload, report.exact, args.format)


def cmd_validate(args: argparse.Namespace) -> int:
    g = read_file(args.graph, parse_graph)
    mode = Mode.parse(args.mode) if args.mode else None
    rep = read_file(args.rep, lambda t: parse_representation(t, mode))
    try:
        report = validate(rep, g)
    except ValueError as exc:
        return _finish({"command": "validate", "error": str(exc)}, False, args.format)
    return _finish({"command": "validate", "report": report.as_dict()}, report.ok, args.format)


def cmd_analyze(args: argparse.Namespace) -> int:
    mode = Mode.parse(args.mode) if args.mode else None
    rep = read_file(args.rep, lambda t: parse_representation(t, mode))
    g = read_file(args.graph, parse_graph) if args.graph else None
    payload: dict[str, Any] = {"command": "analyze", "stats": stats(rep).as_dict()}
    ok = True
    if args.bounds:
        reports = all_bounds(rep, g)
        payload["bounds"] = [b.as_dict() for b in reports]
        ok = all(b.holds for b in reports)
    return _finish(payload, ok, args.format)


def cmd_render(args: argparse.Namespace) -> int:
    mode = Mode.parse(args.mode) if args.mode else None
    rep = read_file(args.rep, lambda t: parse_representation(t, mode))
    try:
        style = RenderStyle(cell=args.cell, offset=args.offset, labels=not args.no_labels,
                            grid_dots=not args.no_grid)
        svg = render_svg(rep, style)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def _sweep_case(path: Path, args: argparse.Namespace) -> dict[str, Any]:
    case = argparse.Namespace(graph=str(path), method=args.method, intervals=None,
                              decomposition=None, drawing=None, minor=None, closed=False)
    row: dict[str, Any] = {"case": path.name}
    try:
        rep, target, _ = build(case)
    except (ParseError, UsageError, OSError, ValueError) as exc:
        return {**row, "ok": False, "error": str(exc)}
    report = validate(rep, target)
    s = report.stats
    row.update(ok=report.exact, n=target.n, m=target.m, width=s.width, height=s.height,
               distinct_grid_edges=s.distinct_grid_edges, multiplicity=s.multiplicity)
    if args.bounds:
        row["bounds_hold"] = all(b.holds for b in all_bounds(rep, target))
        row["ok"] = row["ok"] and row["bounds_hold"]
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{path.stem}.rep").write_text(serialize_representation(rep), encoding="utf-8")
    return row


def cmd_sweep(args: argparse.Namespace) -> int:
    paths = [Path(p) for p in args.graphs]
    with ThreadPoolExecutor(max_workers=max(args.jobs, 1)) as pool:
        rows = list(pool.map(lambda p: _sweep_case(p, args), paths))
    ok = all(r["ok"] for r in rows)
    return _finish({"command": "sweep", "cases": rows}, ok, args.format)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="epgrid",
                                     description="Grid path representations of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "text"), default="text")

    def mode(p: argparse.ArgumentParser) -> None:
        p.add_argument("--mode", choices=[m.value for m in Mode],
                       help="override the mode header of the representation file")

    c = sub.add_parser("construct", help="build an EPG representation of a graph")
    c.add_argument("--method", choices=("complete", "pathwidth", "orthogonal"), required=True)
    c.add_argument("--graph", required=True)
    c.add_argument("--intervals")
    c.add_argument("--decomposition")
    c.add_argument("--drawing")
    c.add_argument("--minor")
    c.add_argument("--closed", action="store_true", help="keep orthogonal paths closed")
    c.add_argument("--out", help="representation file to write (default: standard output)")
    c.add_argument("--report", help="also write the validation report here")
    common(c)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("validate", help="compare a representation with a graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--rep", required=True)
    mode(v)
    common(v)
    v.set_defaults(func=cmd_validate)

    a = sub.add_parser("analyze", help="statistics and lower-bound checks")
    a.add_argument("--rep", required=True)
    a.add_argument("--graph")
    a.add_argument("--bounds", action="store_true")
    mode(a)
    common(a)
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("render", help="draw a representation as SVG")
    r.add_argument("--rep", required=True)
    r.add_argument("--out")
    r.add_argument("--cell", type=int, default=24)
    r.add_argument("--offset", type=float)
    r.add_argument("--no-labels", action="store_true")
    r.add_argument("--no-grid", action="store_true")
    mode(r)
    r.set_defaults(func=cmd_render)

    s = sub.add_parser("sweep", help="run a construction over many graph files")
    s.add_argument("graphs", nargs="+")
    s.add_argument("--method", choices=("complete", "pathwidth"), default="complete")
    s.add_argument("--out-dir")
    s.add_argument("--bounds", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    common(s)
    s.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except (ParseError, UsageError) as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"epgrid: error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"epgrid: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
