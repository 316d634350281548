"""Lower-bound checks on produced representations and a brute-force pathwidth oracle."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .graph import Graph, triangle_free
from .intervals import IntervalRepresentation, clique_number
from .representation import GridRepresentation, Mode, stats, validate

MAX_BRUTE_FORCE_N = 12


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one inequality check.

    ``applicable`` is False when a precondition fails; such reports always
    have ``holds`` True so that sweeps only count genuine violations.
    """

    name: str
    inequality: str
    holds: bool
    witness: Any = None
    applicable: bool = True
    details: dict[str, int] | None = None

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "inequality": self.inequality,
            "holds": self.holds,
            "applicable": self.applicable,
            "witness": self.witness,
            **(self.details or {}),
        }


def _not_applicable(name: str, why: str) -> BoundReport:
    return BoundReport(name, f"not applicable: {why}", True, applicable=False)


def check_edge_count_bound(rep: GridRepresentation, g: Graph) -> BoundReport:
    """A triangle-free graph needs at least ``m`` distinct grid-edges in any EPG."""
    name = "edge-count"
    if rep.mode is not Mode.EPG:
        return _not_applicable(name, "representation is not in EPG mode")
    if not triangle_free(g):
        return _not_applicable(name, "graph has a triangle")
    if set(rep.paths) != set(g.vertices) or not validate(rep, g).exact:
        return _not_applicable(name, "representation does not validate exactly")
    used = stats(rep).distinct_grid_edges
    holds = used >= g.m
    return BoundReport(name, f"{used} >= {g.m}", holds,
                       witness=None if holds else {"distinct_grid_edges": used, "m": g.m},
                       details={"distinct_grid_edges": used, "m": g.m})


def projection_intervals(rep: GridRepresentation) -> IntervalRepresentation:
    """x-extent of every path that uses at least one grid-edge."""
    out = {}
    for v, p in rep.paths.items():
        if len(p.points()) < 2:
            continue
        xs = [x for x, _ in p.corners]
        out[v] = (min(xs), max(xs))
    return IntervalRepresentation(out)


def _measured(rep: GridRepresentation) -> tuple[int, int]:
    s = stats(rep)
    return max(s.multiplicity, 1), s.height


def projection_pathwidth_bound(rep: GridRepresentation) -> BoundReport:
    """Clique number of the x-projections is at most ``c(3h - 1)``.

    A column meets ``2h`` horizontal and ``h - 1`` vertical grid-edges of the
    box, each used by at most ``c`` paths, so this certifies
    ``pw <= c(3h - 1) - 1`` for the represented graph.
    """
    name = "projection"
    if rep.mode is not Mode.EPG:
        return _not_applicable(name, "representation is not in EPG mode")
    c, h = _measured(rep)
    bound = c * (3 * h - 1)
    ir = projection_intervals(rep)
    omega = clique_number(ir)
    holds = omega <= bound
    witness = None
    if not holds:
        witness = {"omega": omega, "bound": bound}
    return BoundReport(name, f"{omega} <= {c}*(3*{h}-1) = {bound}", holds, witness,
                       details={"omega": omega, "c": c, "h": h, "pathwidth_bound": bound - 1})


@lru_cache(maxsize=256)
def _vertex_separation(n: int, adj_masks: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    full = (1 << n) - 1
    # boundary[S]: vertices of S with a neighbour outside S
    best = [0] * (1 << n)
    choice = [-1] * (1 << n)
    for s in range(1, full + 1):
        outside = full & ~s
        boundary = 0
        rest = s
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if adj_masks[i] & outside:
                boundary += 1
            rest ^= low
        value = None
        rest = s
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            cand = max(best[s ^ low], boundary)
            if value is None or cand < value:
                value, choice[s] = cand, i
            rest ^= low
        best[s] = value
    order = []
    s = full
    while s:
        i = choice[s]
        order.append(i)
        s ^= 1 << i
    return best[full], tuple(reversed(order))


def brute_force_pathwidth(g: Graph) -> tuple[int, list[int]]:
    """Exact pathwidth as the vertex separation number, with one optimal ordering.

    ``f(S) = min over v in S of max(f(S - v), |boundary(S)|)`` where the
    boundary holds the vertices of ``S`` with a neighbour outside ``S``.
    The ordering lists vertices in the order they are placed.
    """
    if g.n > MAX_BRUTE_FORCE_N:
        raise ValueError(f"brute_force_pathwidth supports n <= {MAX_BRUTE_FORCE_N}, got {g.n}")
    if g.n == 0:
        return 0, []
    index = {v: i for i, v in enumerate(g.vertices)}
    masks = [0] * g.n
    for u, v in g.edges:
        masks[index[u]] |= 1 << index[v]
        masks[index[v]] |= 1 << index[u]
    width, order = _vertex_separation(g.n, tuple(masks))
    return width, [g.vertices[i] for i in order]


def cross_check_pathwidth(rep: GridRepresentation, g: Graph) -> BoundReport:
    """Exact ``pw(g) <= c(3h - 1) - 1`` with the measured ``c`` and ``h`` of ``rep``."""
    name = "pathwidth"
    if g.n > MAX_BRUTE_FORCE_N:
        return _not_applicable(name, f"n = {g.n} exceeds {MAX_BRUTE_FORCE_N}")
    if rep.mode is not Mode.EPG:
        return _not_applicable(name, "representation is not in EPG mode")
    if set(rep.paths) != set(g.vertices) or not validate(rep, g).exact:
        return _not_applicable(name, "representation does not validate exactly")
    c, h = _measured(rep)
    pw, order = brute_force_pathwidth(g)
    bound = c * (3 * h - 1) - 1
    holds = pw <= bound
    return BoundReport(name, f"{pw} <= {c}*(3*{h}-1)-1 = {bound}", holds,
                       witness=None if holds else {"ordering": order},
                       details={"pathwidth": pw, "c": c, "h": h, "bound": bound})


def all_bounds(rep: GridRepresentation, g: Graph | None = None) -> list[BoundReport]:
    reports = [projection_pathwidth_bound(rep)]
    if g is not None:
        reports.append(check_edge_count_bound(rep, g))
        reports.append(cross_check_pathwidth(rep, g))
    return reports
