"""Turning proper VPG representations into EPG representations.

Both transforms work on the unit-step point lists of the paths and splice a
small detour in at one crossing per represented edge.  Detours at different
crossings touch disjoint grid-edges, so the order in which edges are
processed does not change the result.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Edge, Graph, edge_key
from .grid import GridPath, MonotoneClass, Point, bounding_box, is_x_monotone, monotone_class
from .representation import (GridRepresentation, Mode, crossing_roles, induced_graph_vpg,
                             is_proper_vpg)


class TransformError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    """Where an edge ``(v, w)`` is realised and which path plays which role."""

    point: Point
    rightward: int
    upward: int


def crossing_assignment(rv: GridRepresentation, edges: Iterable[Edge]) -> dict[Edge, Crossing]:
    """Lexicographically smallest shared point per edge, with right/up roles."""
    out: dict[Edge, Crossing] = {}
    for u, v in edges:
        found = crossing_roles(rv, u, v)
        if found is None:
            raise TransformError(f"paths of {u} and {v} share no grid-point")
        q, right, up = found
        out[edge_key(u, v)] = Crossing(q, right, up)
    return out


def _check_input(rv: GridRepresentation, g_sub: Graph) -> None:
    cert = is_proper_vpg(rv)
    if not cert:
        raise TransformError(f"input is not a proper VPG (condition ({cert.violation}) "
                             f"fails at {cert.witness})")
    missing = sorted(set(g_sub.vertices) - set(rv.paths))
    if missing:
        raise TransformError(f"vertices {missing} have no path")
    induced = induced_graph_vpg(rv.restricted(g_sub.vertices))
    extra = sorted(g_sub.edges - induced.edges)
    if extra:
        raise TransformError(f"edges {extra[:5]} are not edges of the induced VPG graph")


def _splice(points: list[Point], closed: bool, a: Point, b: Point,
            detour: Sequence[Point]) -> None:
    """Insert ``detour`` between consecutive points ``a`` and ``b`` (either order)."""
    count = len(points)
    stop = count if closed else count - 1
    for i in range(stop):
        p, q = points[i], points[(i + 1) % count]
        if (p, q) == (a, b):
            points[i + 1:i + 1] = list(detour)
            return
        if (p, q) == (b, a):
            points[i + 1:i + 1] = list(reversed(detour))
            return
    raise TransformError(f"path does not use grid-edge {a}-{b}")


def _replace_middle(points: list[Point], a: Point, mid: Point, b: Point, new_mid: Point) -> None:
    for i in range(1, len(points) - 1):
        if points[i] == mid and {points[i - 1], points[i + 1]} == {a, b}:
            points[i] = new_mid
            return
    raise TransformError(f"path has no bend {a}-{mid}-{b}")


def _ensure(cond: bool, message: str) -> None:
    if not cond:
        raise AssertionError(message)


def bump_transform(rv: GridRepresentation, g_sub: Graph,
                   order: Sequence[Edge] | None = None) -> GridRepresentation:
    """Proper VPG to EPG of a subgraph in a grid twice as wide and tall.

    Coordinates are doubled; for every edge the rightward path at the chosen
    crossing ``(2i, 2j)`` takes a bump through ``(2i, 2j+1)`` and
    ``(2i+1, 2j+1)``, so it shares the grid-edge above ``(2i, 2j)`` with the
    upward path.
    """
    _check_input(rv, g_sub)
    cross = crossing_assignment(rv, g_sub.edges)
    pts: dict[int, list[Point]] = {}
    for v in g_sub.vertices:
        p = rv.paths[v]
        doubled = GridPath(tuple((2 * x, 2 * y) for x, y in p.corners), p.closed)
        pts[v] = doubled.points()
    for e in (order if order is not None else sorted(g_sub.edges)):
        c = cross[edge_key(*e)]
        x, y = 2 * c.point[0], 2 * c.point[1]
        _splice(pts[c.rightward], rv.paths[c.rightward].closed, (x, y), (x + 1, y),
                [(x, y + 1), (x + 1, y + 1)])
    out = GridRepresentation({v: GridPath(tuple(pts[v]), rv.paths[v].closed)
                              for v in g_sub.vertices}, Mode.EPG)
    if rv.paths and out.paths:
        box = bounding_box(rv.paths[v] for v in g_sub.vertices)
        got = bounding_box(out.paths.values())
        _ensure(got.fits(2 * box.width, 2 * box.height),
                f"bump output {got} exceeds {2 * box.width}x{2 * box.height}")
    for v in g_sub.vertices:
        p = rv.paths[v]
        if not p.closed and is_x_monotone(p):
            _ensure(is_x_monotone(out.paths[v]), f"bump broke x-monotonicity of {v}")
    return out


def _skew_point(p: Point) -> Point:
    return (2 * p[0] + p[1], 2 * p[1])


def _skew_points(points: Sequence[Point], closed: bool) -> list[Point]:
    seq = list(points) + ([points[0]] if closed else [])
    out = [_skew_point(seq[0])]
    for a, b in zip(seq, seq[1:]):
        if a[0] != b[0]:
            out.append(_skew_point(b))
            continue
        lo = a if a[1] < b[1] else b
        x, y = _skew_point(lo)
        zig = [(x, y + 1), (x + 1, y + 1)]
        out.extend(zig if lo == a else list(reversed(zig)))
        out.append(_skew_point(b))
    if closed:
        out.pop()
    return out


def _check_xy_plus(rv: GridRepresentation, vertices: Iterable[int]) -> None:
    for v in vertices:
        p = rv.paths[v]
        if p.closed or monotone_class(p) is not MonotoneClass.XY_PLUS:
            raise TransformError(f"path of {v} is not xy+-monotone")


def skew(rv: GridRepresentation) -> GridRepresentation:
    """Map ``(i, j)`` to ``(2i + j, 2j)``; vertical unit steps become zig-zags."""
    cert = is_proper_vpg(rv)
    if not cert:
        raise TransformError(f"input is not a proper VPG (condition ({cert.violation}))")
    _check_xy_plus(rv, rv.paths)
    return GridRepresentation(
        {v: GridPath(tuple(_skew_points(p.points(), p.closed)), p.closed)
         for v, p in rv.paths.items()},
        Mode.PROPER_VPG)


def xyplus_transform(rv: GridRepresentation, g_sub: Graph,
                     order: Sequence[Edge] | None = None) -> GridRepresentation:
    """Proper xy+ VPG to xy+ EPG of a subgraph in a ``(2w + h) x 2h`` grid.

    After the skew, the upward path at each chosen corresponding point
    ``(2i + j, 2j)`` trades its zig-zag for a step right then up, sharing the
    horizontal grid-edge with the rightward path.
    """
    _check_input(rv, g_sub)
    _check_xy_plus(rv, g_sub.vertices)
    cross = crossing_assignment(rv, g_sub.edges)
    pts = {v: _skew_points(rv.paths[v].points(), False) for v in g_sub.vertices}
    for e in (order if order is not None else sorted(g_sub.edges)):
        c = cross[edge_key(*e)]
        x, y = _skew_point(c.point)
        _replace_middle(pts[c.upward], (x, y), (x, y + 1), (x + 1, y + 1), (x + 1, y))
    out = GridRepresentation({v: GridPath(tuple(pts[v])) for v in g_sub.vertices}, Mode.EPG)
    if out.paths:
        box = bounding_box(rv.paths[v] for v in g_sub.vertices)
        got = bounding_box(out.paths.values())
        w, h = box.width, box.height
        _ensure(got.fits(2 * w + h, 2 * h), f"xy+ output {got} exceeds {2 * w + h}x{2 * h}")
    for v, p in out.paths.items():
        _ensure(monotone_class(p) is MonotoneClass.XY_PLUS, f"path of {v} lost xy+")
    return out
