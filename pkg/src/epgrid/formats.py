"""Line-oriented text formats for graphs, intervals, decompositions, representations,
orthogonal drawings and minor recipes.

Every reader skips blank lines and ``#`` comments and raises :class:`ParseError`
carrying the 1-based line number of the offending line.  Writers emit the
canonical form, so ``parse(serialize(x)) == x``.
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterator, TypeVar

from .graph import Graph, MinorRecipe, edge_key
from .grid import GridPath, Point
from .intervals import IntervalRepresentation, Number, PathDecomposition
from .orthogonal import OrthogonalDrawing
from .representation import GridRepresentation, Mode

T = TypeVar("T")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body.split()


def _int(tok: str, line: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", line) from None


def _vertex(tok: str, line: int) -> int:
    v = _int(tok, line)
    if v < 0:
        raise ParseError(f"vertex ids must be non-negative, got {v}", line)
    return v


def _point(tok: str, line: int) -> Point:
    parts = tok.split(",")
    if len(parts) != 2:
        raise ParseError(f"expected a point x,y, got {tok!r}", line)
    return _int(parts[0], line), _int(parts[1], line)


def _number(tok: str, line: int) -> Number:
    try:
        value = Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a number, got {tok!r}", line) from None
    return int(value) if value.denominator == 1 else value


def _format_number(x: Number) -> str:
    return str(x)


def _path(tokens: list[str], line: int) -> GridPath:
    closed = False
    if tokens and tokens[-1] == "closed":
        closed, tokens = True, tokens[:-1]
    if not tokens:
        raise ParseError("path has no corners", line)
    try:
        return GridPath(tuple(_point(t, line) for t in tokens), closed)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), line) from None


def _format_path(p: GridPath) -> str:
    body = " ".join(f"{x},{y}" for x, y in p.corners)
    return body + (" closed" if p.closed else "")


# graphs

def parse_graph(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last = 0
    for no, toks in _lines(text):
        last = no
        if header is None:
            if len(toks) != 2:
                raise ParseError("header must be 'n m'", no)
            header = (_int(toks[0], no), _int(toks[1], no))
            if header[0] < 0 or header[1] < 0:
                raise ParseError("n and m must be non-negative", no)
            continue
        if len(toks) != 2:
            raise ParseError("edge line must be 'u v'", no)
        u, v = _vertex(toks[0], no), _vertex(toks[1], no)
        if u == v:
            raise ParseError(f"loop at vertex {u}", no)
        if max(u, v) >= header[0]:
            raise ParseError(f"vertex id {max(u, v)} out of range for n = {header[0]}", no)
        e = edge_key(u, v)
        if e in seen:
            raise ParseError(f"duplicate edge {e}", no)
        seen.add(e)
        edges.append(e)
    if header is None:
        raise ParseError("missing header 'n m'", 1)
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} edges, found {len(edges)}", last)
    return Graph.from_edges(header[0], edges)


def serialize_graph(g: Graph) -> str:
    if g.vertices != tuple(range(g.n)):
        raise ValueError("graph files need vertices 0..n-1")
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# intervals and decompositions

def parse_intervals(text: str) -> IntervalRepresentation:
    out: dict[int, tuple[Number, Number]] = {}
    for no, toks in _lines(text):
        if len(toks) != 3:
            raise ParseError("interval line must be 'v l r'", no)
        v = _vertex(toks[0], no)
        if v in out:
            raise ParseError(f"vertex {v} listed twice", no)
        lo, hi = _number(toks[1], no), _number(toks[2], no)
        if lo > hi:
            raise ParseError(f"interval of {v} has left end {lo} > right end {hi}", no)
        out[v] = (lo, hi)
    return IntervalRepresentation(out)


def serialize_intervals(ir: IntervalRepresentation) -> str:
    return "".join(f"{v} {_format_number(lo)} {_format_number(hi)}\n"
                   for v, (lo, hi) in ir.intervals.items())


def parse_decomposition(text: str) -> PathDecomposition:
    bags = []
    for no, toks in _lines(text):
        bag = [_vertex(t, no) for t in toks]
        if len(set(bag)) != len(bag):
            raise ParseError("bag repeats a vertex", no)
        bags.append(frozenset(bag))
        try:
            PathDecomposition(tuple(bags))
        except ValueError as exc:
            raise ParseError(str(exc), no) from None
    return PathDecomposition(tuple(bags))


def serialize_decomposition(pd: PathDecomposition) -> str:
    return "".join(" ".join(str(v) for v in sorted(b)) + "\n" for b in pd.bags)


# representations

def parse_representation(text: str, mode: Mode | None = None) -> GridRepresentation:
    """Read ``v : x,y x,y ... [closed]`` lines, with an optional ``mode <m>`` header.

    An explicit ``mode`` argument overrides the header; the default is EPG.
    """
    header_mode: Mode | None = None
    paths: dict[int, GridPath] = {}
    for no, toks in _lines(text):
        if toks[0] == "mode":
            if header_mode is not None or paths or len(toks) != 2:
                raise ParseError("'mode <m>' must appear once, before the paths", no)
            try:
                header_mode = Mode.parse(toks[1])
            except ValueError as exc:
                raise ParseError(str(exc), no) from None
            continue
        if len(toks) < 3 or toks[1] != ":":
            raise ParseError("path line must be 'v : x,y ...'", no)
        v = _vertex(toks[0], no)
        if v in paths:
            raise ParseError(f"vertex {v} listed twice", no)
        paths[v] = _path(toks[2:], no)
    return GridRepresentation(paths, mode or header_mode or Mode.EPG)


def serialize_representation(rep: GridRepresentation) -> str:
    """Canonical text with the bounding box moved to origin ``(1, 1)``."""
    rep = rep.normalized()
    lines = [f"mode {rep.mode.value}"]
    lines += [f"{v} : {_format_path(p)}" for v, p in rep.paths.items()]
    return "\n".join(lines) + "\n"


# orthogonal drawings

def parse_drawing(text: str) -> OrthogonalDrawing:
    section: str | None = None
    pos: dict[int, Point] = {}
    routes: dict[tuple[int, int], GridPath] = {}
    for no, toks in _lines(text):
        if len(toks) == 1 and toks[0] in ("vertices", "edges"):
            section = toks[0]
            continue
        if section == "vertices":
            if len(toks) != 3:
                raise ParseError("vertex line must be 'v x y'", no)
            v = _vertex(toks[0], no)
            if v in pos:
                raise ParseError(f"vertex {v} listed twice", no)
            pos[v] = (_int(toks[1], no), _int(toks[2], no))
        elif section == "edges":
            if len(toks) < 4 or toks[2] != ":":
                raise ParseError("edge line must be 'u v : x,y ...'", no)
            u, v = _vertex(toks[0], no), _vertex(toks[1], no)
            e = edge_key(u, v)
            if u == v or e in routes:
                raise ParseError(f"edge {u} {v} is a loop or a duplicate", no)
            for w in (u, v):
                if w not in pos:
                    raise ParseError(f"edge uses undeclared vertex {w}", no)
            path = _path(toks[3:], no)
            routes[e] = path if u < v else path.reversed()
        else:
            raise ParseError("expected a 'vertices' or 'edges' section header", no)
    return OrthogonalDrawing(pos, routes)


def serialize_drawing(d: OrthogonalDrawing) -> str:
    lines = ["vertices"] + [f"{v} {x} {y}" for v, (x, y) in d.vertex_position.items()]
    lines += ["edges"] + [f"{u} {v} : {_format_path(p)}" for (u, v), p in d.edge_route.items()]
    return "\n".join(lines) + "\n"


# minor recipes

def parse_minor(text: str) -> MinorRecipe:
    dv: set[int] = set()
    de: set[tuple[int, int]] = set()
    contract: list[tuple[int, int]] = []
    for no, toks in _lines(text):
        verb, args = toks[0], toks[1:]
        want = 1 if verb == "delete-vertex" else 2
        if verb not in ("delete-vertex", "delete-edge", "contract"):
            raise ParseError(f"unknown verb {verb!r}", no)
        if len(args) != want:
            raise ParseError(f"{verb} takes {want} vertex id(s)", no)
        ids = [_vertex(t, no) for t in args]
        if verb == "delete-vertex":
            dv.add(ids[0])
        elif ids[0] == ids[1]:
            raise ParseError(f"{verb} needs two distinct vertices", no)
        elif verb == "delete-edge":
            de.add(edge_key(*ids))
        else:
            contract.append((ids[0], ids[1]))
    return MinorRecipe(frozenset(dv), frozenset(de), tuple(contract))


def serialize_minor(r: MinorRecipe) -> str:
    if r.name_map:
        raise ValueError("recipe files cannot store a name map")
    lines = [f"delete-vertex {v}" for v in sorted(r.deleted_vertices)]
    lines += [f"delete-edge {u} {v}" for u, v in sorted(r.deleted_edges)]
    lines += [f"contract {u} {v}" for u, v in r.contracted_edges]
    return "".join(line + "\n" for line in lines)


def read_file(path: str | Path, parser: Callable[[str], T]) -> T:
    return parser(Path(path).read_text(encoding="utf-8"))


__all__ = [
    "ParseError", "parse_decomposition", "parse_drawing", "parse_graph",
    "parse_intervals", "parse_minor", "parse_representation", "read_file",
    "serialize_decomposition", "serialize_drawing", "serialize_graph", "serialize_intervals",
    "serialize_minor", "serialize_representation",
]
