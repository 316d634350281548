"""End-to-end builders: the Γ-layout for any graph and the pathwidth recursion."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .graph import Graph
from .grid import GridPath, Point, bounding_box
from .intervals import (IntervalRepresentation, clique_number, components,
                        induced_interval_graph, require_normalized)
from .representation import GridRepresentation, Mode, induced_graph_vpg, is_proper_vpg
from .transforms import xyplus_transform


def complete_vpg(n: int) -> GridRepresentation:
    """Proper VPG of K_n in an n x n grid, vertex ``i`` (0-based) drawn as a Γ.

    The Γ of the 1-based vertex ``i`` has its corner at ``(i - 1, i)`` with
    arms reaching down to ``y = 1`` and right to ``x = n``.  Vertex 1 keeps
    only its horizontal arm, starting at ``(1, 1)``.
    """
    if n < 1:
        raise ValueError("complete_vpg needs n >= 1")
    paths = {0: GridPath(((1, 1), (n, 1)))}
    for i in range(2, n + 1):
        paths[i - 1] = GridPath(((i - 1, 1), (i - 1, i), (n, i)))
    return GridRepresentation(paths, Mode.PROPER_VPG)


def epg_any_graph(g: Graph) -> GridRepresentation:
    """xy+-monotone EPG representation of ``g`` in a 3n x 2n grid."""
    if g.n == 0:
        return GridRepresentation({}, Mode.EPG)
    index = {v: i for i, v in enumerate(g.vertices)}
    rv = complete_vpg(g.n).relabelled({i: v for v, i in index.items()})
    rep = xyplus_transform(rv, g)
    box = bounding_box(rep.paths.values())
    if not box.fits(3 * g.n, 2 * g.n):
        raise AssertionError(f"{box} exceeds {3 * g.n}x{2 * g.n}")
    return rep


@dataclass(frozen=True)
class FarthestPath:
    """Greedy chain of intervals reaching farthest right at every step.

    ``candidates[i]`` is the set of intervals starting strictly inside
    ``path[i]`` and ending strictly after it; ``path[i + 1]`` is the one in
    that set with the largest right end.
    """

    path: tuple[int, ...]
    candidates: tuple[frozenset[int], ...]


def farthest_path(ir: IntervalRepresentation) -> FarthestPath:
    if not ir.has_distinct_endpoints():
        raise ValueError("farthest_path needs distinct endpoints")
    if len(components(ir)) != 1:
        raise ValueError("farthest_path needs a connected interval graph")
    iv = ir.intervals
    first = min(iv, key=lambda v: iv[v][0])
    path = [first]
    cands: list[frozenset[int]] = []
    while True:
        lo, hi = iv[path[-1]]
        a = frozenset(v for v, (l, r) in iv.items() if lo < l < hi < r)
        cands.append(a)
        if not a:
            break
        path.append(max(a, key=lambda v: iv[v][1]))
    return FarthestPath(tuple(path), tuple(cands))


@dataclass(frozen=True)
class PathwidthVpgResult:
    """Output of the pathwidth recursion.

    ``anchor_row[v]`` is the (negative) row of the horizontal segment of
    ``path(v)`` spanning ``[2 l(v), 2 r(v)]``; the vertical segment through
    ``{2 r(v)} x [-1, 1]`` sits at column ``2 r(v)``.
    """

    representation: GridRepresentation
    k: int
    anchor_row: Mapping[int, int] = field(default_factory=dict)

    def anchor(self, v: int, ir: IntervalRepresentation) -> tuple[int, int, int]:
        lo, hi = ir.intervals[v]
        return 2 * lo, 2 * hi, self.anchor_row[v]

    def vertical_column(self, v: int, ir: IntervalRepresentation) -> int:
        return 2 * ir.intervals[v][1]


def _shift_rows(y: int) -> int:
    if y >= 1:
        return y + 2
    if y <= -1:
        return y - 2
    raise AssertionError("corner on the axis row")


def _build(ir: IntervalRepresentation) -> tuple[dict[int, list[Point]], dict[int, int]]:
    """Corner lists and anchor rows for one interval representation (any components)."""
    corners: dict[int, list[Point]] = {}
    anchors: dict[int, int] = {}
    for comp in components(ir):
        k = clique_number(comp) - 1
        iv = comp.intervals
        if k == 0:
            (v,) = comp.vertices
            lo, hi = iv[v]
            corners[v] = [(2 * lo, -1), (2 * hi, -1), (2 * hi, 1)]
            anchors[v] = -1
            continue
        fp = farthest_path(comp).path
        rest = comp.restricted(set(comp.vertices) - set(fp))
        inner, inner_anchor = _build(rest)
        for v, cs in inner.items():
            corners[v] = [(x, _shift_rows(y)) for x, y in cs]
            anchors[v] = _shift_rows(inner_anchor[v])
        bottom = -2 * k - 2
        for i, a in enumerate(fp, start=1):
            lo, hi = iv[a]
            row = 1 if i % 2 == 1 else 2
            cs = [(2 * lo, bottom), (2 * lo, -row), (2 * hi, -row), (2 * hi, row)]
            if i < len(fp):
                cs.append((2 * iv[fp[i]][1] + 1, row))
            corners[a] = cs
            anchors[a] = -row
    return corners, anchors


def pathwidth_vpg(ir: IntervalRepresentation) -> PathwidthVpgResult:
    """Proper xy+ VPG of a supergraph of the interval graph of ``ir``.

    Each connected component is handled separately.  A component of clique
    number ``k + 1`` removes its farthest path, recurses on the rest, opens
    two rows above and below the axis and routes the path's intervals as
    four-segment staircases alternating between rows 1 and 2.
    """
    require_normalized(ir)
    k = clique_number(ir) - 1
    corners, anchors = _build(ir)
    rep = GridRepresentation({v: GridPath(tuple(cs)) for v, cs in corners.items()},
                             Mode.PROPER_VPG)
    return PathwidthVpgResult(rep, max(k, 0), anchors)


def recursion_violations(result: PathwidthVpgResult, ir: IntervalRepresentation,
                      x_range: str = "precise") -> list[str]:
    """Check the recursion's three structural guarantees, plus properness and containment.

    ``x_range="precise"`` bounds columns by ``[2 min l, 1 + 2 max r]``;
    ``x_range="coarse"`` uses ``[2, 2n + 1]`` instead.
    """
    rep = result.representation
    out: list[str] = []
    if not rep.paths:
        return out
    k, n = result.k, len(ir)
    box = bounding_box(rep.paths.values())
    if x_range == "coarse":
        x_lo, x_hi = 2, 2 * n + 1
    else:
        x_lo = 2 * min(lo for lo, _ in ir.intervals.values())
        x_hi = 1 + 2 * max(hi for _, hi in ir.intervals.values())
    if box.origin[0] < x_lo or box.x_max > x_hi:
        out.append(f"(1) columns [{box.origin[0]}, {box.x_max}] outside [{x_lo}, {x_hi}]")
    if box.origin[1] < -2 * k - 2 or box.y_max > 2 * k + 1:
        out.append(f"(1) rows [{box.origin[1]}, {box.y_max}] outside [{-2 * k - 2}, {2 * k + 1}]")
    for v, p in rep.paths.items():
        lo, hi = ir.intervals[v]
        segs = p.segments()
        if not any(a[1] == b[1] < 0 and sorted((a[0], b[0])) == [2 * lo, 2 * hi]
                   for a, b in segs):
            out.append(f"(2) path {v} lacks a horizontal [{2 * lo}, {2 * hi}] below the axis")
        if not any(a[0] == b[0] == 2 * hi and min(a[1], b[1]) <= -1 and max(a[1], b[1]) >= 1
                   for a, b in segs):
            out.append(f"(3) path {v} lacks the vertical {{{2 * hi}}} x [-1, 1]")
    cert = is_proper_vpg(rep)
    if not cert:
        out.append(f"not proper: condition ({cert.violation}) at {cert.witness}")
    missing = induced_interval_graph(ir).edges - induced_graph_vpg(rep).edges
    if missing:
        out.append(f"interval edges {sorted(missing)[:5]} not represented")
    return out


def pathwidth_epg(g: Graph, ir: IntervalRepresentation,
                  mapping: Mapping[int, int] | None = None) -> GridRepresentation:
    """xy+ EPG of ``g`` via an interval supergraph ``ir`` of clique number k + 1.

    ``mapping`` sends each vertex of ``g`` to its interval (identity if None).
    Height is at most 8k + 8 rows.
    """
    mapping = dict(mapping) if mapping is not None else {v: v for v in g.vertices}
    h_graph = induced_interval_graph(ir)
    for u, v in g.edges:
        if not h_graph.has_edge(mapping[u], mapping[v]):
            raise ValueError(f"edge ({u}, {v}) is not covered by the interval supergraph")
    if len(set(mapping.values())) != len(mapping):
        raise ValueError("mapping must be injective")
    if g.n == 0:
        return GridRepresentation({}, Mode.EPG)
    result = pathwidth_vpg(ir)
    back = {h: v for v, h in mapping.items()}
    rv = result.representation.restricted(back).relabelled(back).normalized()
    rep = xyplus_transform(rv, g)
    k = result.k
    box = bounding_box(rep.paths.values())
    if box.height > 8 * k + 8:
        raise AssertionError(f"height {box.height} exceeds 8k + 8 = {8 * k + 8}")
    return rep
