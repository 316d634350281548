"""EPG representations of minors traced from orthogonal drawings of 4-graphs.

Every drawing point ``(x, y)`` becomes the unit square with lower-left corner
``(2x, 2y)``.  An edge route becomes a strip one unit wide whose two sides,
the left and right copies of the route, run between the squares of its ends.
Horizontal runs get their second copy in the new row above, vertical runs in
the new column to the right; at bends the outer copy goes round the square
and the inner copy cuts its corner.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .graph import Edge, Graph, MinorRecipe, Orientation, edge_key, orient_with_out_edges, trace_minor
from .grid import BoundingBox, GridEdge, GridPath, Point, bounding_box, grid_edge
from .representation import GridRepresentation, Mode

Vec = tuple[int, int]

# counter-clockwise order of square sides, named by the direction they face
_SIDES: tuple[Vec, ...] = ((0, -1), (1, 0), (0, 1), (-1, 0))


class DrawingError(ValueError):
    pass


@dataclass(frozen=True)
class OrthogonalDrawing:
    """Vertex points plus one route per edge, stored from the smaller id to the larger."""

    vertex_position: Mapping[int, Point]
    edge_route: Mapping[Edge, GridPath]

    def __post_init__(self) -> None:
        pos = {int(v): (int(p[0]), int(p[1])) for v, p in sorted(self.vertex_position.items())}
        routes: dict[Edge, GridPath] = {}
        for (u, v), path in self.edge_route.items():
            if u > v:
                u, v, path = v, u, path.reversed()
            routes[(u, v)] = path
        object.__setattr__(self, "vertex_position", pos)
        object.__setattr__(self, "edge_route", dict(sorted(routes.items())))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrthogonalDrawing):
            return NotImplemented
        return (dict(self.vertex_position) == dict(other.vertex_position)
                and dict(self.edge_route) == dict(other.edge_route))

    def __hash__(self) -> int:
        return hash((tuple(self.vertex_position.items()), tuple(self.edge_route.items())))

    def graph(self) -> Graph:
        return Graph(self.vertex_position.keys(), self.edge_route.keys())

    def route_from(self, tail: int, head: int) -> GridPath:
        path = self.edge_route[edge_key(tail, head)]
        return path if tail < head else path.reversed()

    def box(self) -> BoundingBox:
        pieces = list(self.edge_route.values())
        pieces += [GridPath((p,)) for p in self.vertex_position.values()]
        return bounding_box(pieces)


def check_drawing(d: OrthogonalDrawing, g: Graph | None = None) -> None:
    """Raise :class:`DrawingError` unless ``d`` is a valid orthogonal drawing (of ``g``)."""
    dg = d.graph()
    if g is not None and (dg.vertices != g.vertices or dg.edges != g.edges):
        raise DrawingError("drawing does not match the graph")
    if dg.max_degree() > 4:
        raise DrawingError("orthogonal drawings need maximum degree 4")
    pos = d.vertex_position
    if len(set(pos.values())) != len(pos):
        raise DrawingError("two vertices share a grid-point")
    at_point = {p: v for v, p in pos.items()}
    edge_owner: dict[GridEdge, Edge] = {}
    interior: dict[Point, list[tuple[Edge, str]]] = {}
    for e, route in d.edge_route.items():
        if route.closed:
            raise DrawingError(f"route of {e} is closed")
        pts = route.points()
        if pts[0] != pos[e[0]] or pts[-1] != pos[e[1]]:
            raise DrawingError(f"route of {e} does not join its end vertices")
        if len(set(pts)) != len(pts):
            raise DrawingError(f"route of {e} revisits a grid-point")
        for ge in route.edge_set:
            if ge in edge_owner:
                raise DrawingError(f"routes of {edge_owner[ge]} and {e} share grid-edge {ge}")
            edge_owner[ge] = e
        for a, q, b in zip(pts, pts[1:], pts[2:]):
            if q in at_point:
                raise DrawingError(f"route of {e} passes through vertex {at_point[q]}")
            if a[1] == q[1] == b[1]:
                kind = "h"
            elif a[0] == q[0] == b[0]:
                kind = "v"
            else:
                kind = "bend"
            interior.setdefault(q, []).append((e, kind))
    for q, users in interior.items():
        if len(users) > 1:
            kinds = sorted(k for _, k in users)
            if kinds != ["h", "v"]:
                raise DrawingError(f"routes {[u for u, _ in users]} meet at {q} "
                                   "without crossing")


def _corner(q: Point, front: Vec, side: Vec) -> Point:
    return (2 * q[0] + (1 + front[0] + side[0]) // 2, 2 * q[1] + (1 + front[1] + side[1]) // 2)


def _left(d: Vec) -> Vec:
    return (-d[1], d[0])


def _right(d: Vec) -> Vec:
    return (d[1], -d[0])


def _neg(d: Vec) -> Vec:
    return (-d[0], -d[1])


def route_copies(route: GridPath) -> tuple[list[Point], list[Point]]:
    """Left and right copies of a route, each from the tail square to the head square."""
    pts = route.points()
    dirs = [(b[0] - a[0], b[1] - a[1]) for a, b in zip(pts, pts[1:])]
    copies = []
    for normal in (_left, _right):
        seq = [_corner(pts[0], dirs[0], normal(dirs[0]))]
        for t in range(1, len(pts) - 1):
            d_in, d_out = dirs[t - 1], dirs[t]
            entry = _corner(pts[t], _neg(d_in), normal(d_in))
            exit_ = _corner(pts[t], d_out, normal(d_out))
            seq.append(entry)
            if entry != exit_:
                seq.append((entry[0] + d_in[0], entry[1] + d_in[1]))
                seq.append(exit_)
        d_last = dirs[-1]
        seq.append(_corner(pts[-1], _neg(d_last), normal(d_last)))
        copies.append(GridPath(tuple(seq)).points())
    return copies[0], copies[1]


def _square(q: Point) -> list[Point]:
    x, y = 2 * q[0], 2 * q[1]
    return [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]


def _side_edge(q: Point, facing: Vec) -> GridEdge:
    return grid_edge(_corner(q, facing, _left(facing)), _corner(q, facing, _right(facing)))


def _rotate_to_wrap(cycle: list[Point], a: Point, b: Point) -> list[Point]:
    """Rotate so the grid-edge ``a``-``b`` joins the last point back to the first."""
    n = len(cycle)
    for i in range(n):
        p, q = cycle[i], cycle[(i + 1) % n]
        if {p, q} == {a, b}:
            return cycle[i + 1:] + cycle[:i + 1]
    raise AssertionError(f"grid-edge {a}-{b} is not on the cycle")


def _merge_cycles(c1: list[Point], c2: list[Point], e: GridEdge) -> list[Point]:
    """Union of two closed trails sharing grid-edge ``e``, with ``e`` removed."""
    a, b = e
    r1 = _rotate_to_wrap(c1, a, b)
    r2 = _rotate_to_wrap(c2, a, b)
    if r2[0] != r1[-1]:
        r2 = list(reversed(r2))
        if r2[0] != r1[-1]:
            r2 = _rotate_to_wrap(r2, a, b)
    return r1 + r2[1:-1] + ([] if r2[-1] == r1[0] else [r2[-1]])


@dataclass(frozen=True)
class _Traced:
    cycles: dict[int, list[Point]]
    orientation: Orientation
    kept: Graph


def _orient(kept: Graph) -> Orientation:
    direction: dict[Edge, tuple[int, int]] = {}
    for comp in kept.components():
        direction.update(orient_with_out_edges(kept.induced(comp)).direction)
    return Orientation(direction)


def _trace_closed(d: OrthogonalDrawing, kept: Graph) -> _Traced:
    orient = _orient(kept)
    pos = d.vertex_position
    out_routes: dict[int, dict[Vec, tuple[list[Point], list[Point]]]] = {v: {} for v in kept.vertices}
    for e in kept.sorted_edges():
        tail, head = orient.direction[e]
        route = d.route_from(tail, head)
        pts = route.points()
        facing = (pts[1][0] - pts[0][0], pts[1][1] - pts[0][1])
        out_routes[tail][facing] = route_copies(route)
    cycles: dict[int, list[Point]] = {}
    for v in kept.vertices:
        sq = _square(pos[v])
        seq = [sq[0]]
        for i, facing in enumerate(_SIDES):
            nxt = sq[(i + 1) % 4]
            if facing in out_routes[v]:
                left, right = out_routes[v][facing]
                seq.extend(right[1:])
                seq.extend(reversed(left))
                seq.pop()
                seq.append(nxt)
            else:
                seq.append(nxt)
        seq.pop()
        cycles[v] = GridPath(tuple(seq), closed=True).points()
    return _Traced(cycles, orient, kept)


def orth_to_epg(d: OrthogonalDrawing, g: Graph, r: MinorRecipe | None = None,
                open_paths: bool = True) -> GridRepresentation:
    """EPG representation of the minor ``apply_minor(g, r)`` in a ``2w x 2h`` grid.

    Edges not needed for the minor are dropped first.  Each remaining edge
    ``v -> w`` (oriented so every degree-4 vertex has an out-edge) makes
    ``path(v)`` run out along both copies of the route and across the facing
    side of the square of ``w``, the one grid-edge the two paths share.
    Contractions splice closed paths along that shared grid-edge.  With
    ``open_paths`` each path then drops one grid-edge nobody else uses.
    """
    check_drawing(d, g)
    r = r if r is not None else MinorRecipe()
    trace = trace_minor(g, r)
    kept = Graph(trace.base.vertices, trace.needed_edges())
    traced = _trace_closed(d, kept)
    pos = d.vertex_position

    cur: dict[int, list[Point]] = dict(traced.cycles)
    for a, b, fresh, e in trace.steps:
        head = traced.orientation.head(e)
        tail = traced.orientation.tail(e)
        route = d.route_from(tail, head).points()
        arrival = (route[-1][0] - route[-2][0], route[-1][1] - route[-2][1])
        shared = _side_edge(pos[head], _neg(arrival))
        cur[fresh] = _merge_cycles(cur.pop(a), cur.pop(b), shared)

    if not open_paths:
        paths = {v: GridPath(tuple(c), closed=True) for v, c in cur.items()}
    else:
        paths = {v: _open_at_private_edge(cur[v], trace.branch[v], d, traced)
                 for v in cur}
    rep = GridRepresentation(paths, Mode.EPG)

    box = d.box()
    if rep.paths:
        got = bounding_box(rep.paths.values())
        if not got.fits(2 * box.width, 2 * box.height):
            raise AssertionError(f"traced output {got} exceeds {2 * box.width}x{2 * box.height}")
    if open_paths:
        use: Counter[GridEdge] = Counter()
        for p in paths.values():
            use.update(p.edge_set)
        for v, c in cur.items():
            closed_edges = GridPath(tuple(c), closed=True).edge_set
            dropped = closed_edges - paths[v].edge_set
            if any(use[e] > 0 for e in dropped):
                raise AssertionError(f"opening path {v} removed a shared grid-edge")
    return rep


def _open_at_private_edge(cycle: list[Point], members: frozenset[int], d: OrthogonalDrawing,
                          traced: _Traced) -> GridPath:
    kept, orient, pos = traced.kept, traced.orientation, d.vertex_position
    choice: GridEdge | None = None
    for v in sorted(members):
        if kept.degree(v) <= 3:
            used = set()
            for w in kept.neighbours(v):
                pts = d.route_from(v, w).points()
                used.add((pts[1][0] - pts[0][0], pts[1][1] - pts[0][1]))
            facing = next(f for f in _SIDES if f not in used)
            choice = _side_edge(pos[v], facing)
            break
    if choice is None:
        for v in sorted(members):
            outs = sorted(w for w in kept.neighbours(v) if orient.tail((v, w)) == v)
            if outs:
                _, right = route_copies(d.route_from(v, outs[0]))
                choice = grid_edge(right[0], right[1])
                break
    if choice is None:
        raise AssertionError(f"no private grid-edge for branch set {sorted(members)}")
    opened = _rotate_to_wrap(cycle, *choice)
    return GridPath(tuple(opened))
