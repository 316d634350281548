"""VPG/EPG representations, exact validators and statistics."""
from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .graph import Edge, Graph, edge_key
from .grid import (BoundingBox, GridEdge, GridPath, MonotoneClass, Point, bounding_box,
                   monotone_class)


class Mode(enum.Enum):
    VPG = "vpg"
    PROPER_VPG = "proper-vpg"
    EPG = "epg"

    @classmethod
    def parse(cls, text: str) -> "Mode":
        text = text.strip().lower().replace("_", "-")
        for m in cls:
            if m.value == text:
                return m
        raise ValueError(f"unknown mode {text!r}")


@dataclass(frozen=True)
class GridRepresentation:
    paths: Mapping[int, GridPath]
    mode: Mode = Mode.EPG

    def __post_init__(self) -> None:
        object.__setattr__(self, "paths", {v: self.paths[v] for v in sorted(self.paths)})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GridRepresentation):
            return NotImplemented
        return self.mode == other.mode and dict(self.paths) == dict(other.paths)

    def __hash__(self) -> int:
        return hash((self.mode, tuple(self.paths.items())))

    @property
    def vertices(self) -> list[int]:
        return list(self.paths)

    def __len__(self) -> int:
        return len(self.paths)

    def with_mode(self, mode: Mode) -> "GridRepresentation":
        return GridRepresentation(self.paths, mode)

    def translated(self, dx: int, dy: int) -> "GridRepresentation":
        return GridRepresentation({v: p.translated(dx, dy) for v, p in self.paths.items()},
                                  self.mode)

    def normalized(self) -> "GridRepresentation":
        """Shift so the bounding box starts at grid-point (1, 1)."""
        if not self.paths:
            return self
        box = bounding_box(self.paths.values())
        return self.translated(1 - box.origin[0], 1 - box.origin[1])

    def restricted(self, keep: Iterable[int]) -> "GridRepresentation":
        ks = set(keep)
        return GridRepresentation({v: p for v, p in self.paths.items() if v in ks}, self.mode)

    def relabelled(self, mapping: Mapping[int, int]) -> "GridRepresentation":
        return GridRepresentation({mapping[v]: p for v, p in self.paths.items()}, self.mode)


def _segment_buckets(rep: GridRepresentation) -> dict[tuple[str, int], list[tuple[int, int, int]]]:
    buckets: dict[tuple[str, int], list[tuple[int, int, int]]] = defaultdict(list)
    for v, p in rep.paths.items():
        for a, b in p.segments():
            if a[1] == b[1]:
                buckets[("h", a[1])].append((min(a[0], b[0]), max(a[0], b[0]), v))
            else:
                buckets[("v", a[0])].append((min(a[1], b[1]), max(a[1], b[1]), v))
    return buckets


def induced_graph_epg(rep: GridRepresentation) -> Graph:
    """Edge iff two paths overlap along a positive-length collinear stretch.

    Works on corner segments: segments on the same grid-line are swept in
    order of their left (or bottom) end.
    """
    edges: set[Edge] = set()
    for segs in _segment_buckets(rep).values():
        segs.sort()
        active: list[tuple[int, int]] = []
        for lo, hi, v in segs:
            active = [(h, w) for h, w in active if h > lo]
            for _, w in active:
                if w != v:
                    edges.add(edge_key(v, w))
            active.append((hi, v))
    return Graph(rep.paths.keys(), edges)


def induced_graph_epg_bruteforce(rep: GridRepresentation) -> Graph:
    owners: dict[GridEdge, list[int]] = defaultdict(list)
    for v, p in rep.paths.items():
        for e in p.edge_set:
            owners[e].append(v)
    edges = {edge_key(a, b) for vs in owners.values() for a, b in combinations(vs, 2)}
    return Graph(rep.paths.keys(), edges)


def _point_owners(rep: GridRepresentation) -> dict[Point, list[int]]:
    owners: dict[Point, list[int]] = defaultdict(list)
    for v, p in rep.paths.items():
        for q in p.point_set:
            owners[q].append(v)
    return owners


def induced_graph_vpg(rep: GridRepresentation) -> Graph:
    edges = {edge_key(a, b) for vs in _point_owners(rep).values() for a, b in combinations(vs, 2)}
    return Graph(rep.paths.keys(), edges)


def _right(p: Point) -> GridEdge:
    return (p, (p[0] + 1, p[1]))


def _up(p: Point) -> GridEdge:
    return (p, (p[0], p[1] + 1))


@dataclass(frozen=True)
class ProperCertificate:
    ok: bool
    violation: str | None = None
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def is_proper_vpg(rep: GridRepresentation) -> ProperCertificate:
    """Check that no grid-edge is shared and every shared point is a right/up crossing."""
    edge_users: dict[GridEdge, list[int]] = defaultdict(list)
    for v, p in rep.paths.items():
        for e in p.edge_set:
            edge_users[e].append(v)
    for e in sorted(edge_users):
        if len(edge_users[e]) > 1:
            return ProperCertificate(False, "a", (e, tuple(edge_users[e])))
    owners = _point_owners(rep)
    for q in sorted(owners):
        vs = owners[q]
        if len(vs) < 2:
            continue
        if len(vs) > 2:
            return ProperCertificate(False, "b", (q, tuple(vs)))
        v, w = vs
        pv, pw = rep.paths[v].edge_set, rep.paths[w].edge_set
        if not ((_right(q) in pv and _up(q) in pw) or (_up(q) in pv and _right(q) in pw)):
            return ProperCertificate(False, "b", (q, (v, w)))
    return ProperCertificate(True)


def crossing_roles(rep: GridRepresentation, v: int, w: int) -> tuple[Point, int, int] | None:
    """Smallest shared grid-point of two paths and (rightward, upward) roles there."""
    shared = rep.paths[v].point_set & rep.paths[w].point_set
    if not shared:
        return None
    q = min(shared)
    if _right(q) in rep.paths[v].edge_set and _up(q) in rep.paths[w].edge_set:
        return q, v, w
    if _right(q) in rep.paths[w].edge_set and _up(q) in rep.paths[v].edge_set:
        return q, w, v
    raise ValueError(f"paths {v} and {w} meet at {q} without a right/up crossing")


@dataclass(frozen=True)
class RepresentationStats:
    box: BoundingBox | None
    distinct_grid_edges: int
    multiplicity: int
    monotone_class: MonotoneClass

    @property
    def width(self) -> int:
        return self.box.width if self.box else 0

    @property
    def height(self) -> int:
        return self.box.height if self.box else 0

    def as_dict(self) -> dict:
        return {
            "width": self.width,
            "height": self.height,
            "origin": list(self.box.origin) if self.box else None,
            "distinct_grid_edges": self.distinct_grid_edges,
            "multiplicity": self.multiplicity,
            "monotone_class": self.monotone_class.label,
        }


def stats(rep: GridRepresentation) -> RepresentationStats:
    use: Counter[GridEdge] = Counter()
    for p in rep.paths.values():
        use.update(p.edge_set)
    box = bounding_box(rep.paths.values()) if rep.paths else None
    cls = min((monotone_class(p) for p in rep.paths.values()), default=MonotoneClass.XY_PLUS)
    return RepresentationStats(box, len(use), max(use.values(), default=0), cls)


def induced_graph(rep: GridRepresentation) -> Graph:
    return induced_graph_epg(rep) if rep.mode is Mode.EPG else induced_graph_vpg(rep)


@dataclass(frozen=True)
class ValidationReport:
    mode: Mode
    missing: tuple[Edge, ...]
    excess: tuple[Edge, ...]
    path_classes: dict[int, MonotoneClass]
    stats: RepresentationStats
    proper: ProperCertificate | None = None

    @property
    def exact(self) -> bool:
        return not self.missing and not self.excess

    @property
    def verdict(self) -> str:
        return "exact" if self.exact else "inexact"

    @property
    def ok(self) -> bool:
        """Exact, and proper as well when the mode asks for it."""
        return self.exact and (self.proper is None or self.proper.ok)

    def as_dict(self) -> dict:
        out = {
            "verdict": self.verdict,
            "mode": self.mode.value,
            "missing_edges": [list(e) for e in self.missing],
            "excess_edges": [list(e) for e in self.excess],
            "path_classes": {str(v): c.label for v, c in self.path_classes.items()},
            **self.stats.as_dict(),
        }
        if self.proper is not None:
            out["proper"] = self.proper.ok
            out["proper_violation"] = self.proper.violation
        return out


def validate(rep: GridRepresentation, g: Graph) -> ValidationReport:
    if set(rep.paths) != set(g.vertices):
        extra = sorted(set(rep.paths) - set(g.vertices))
        absent = sorted(set(g.vertices) - set(rep.paths))
        raise ValueError(f"vertex sets differ: only in representation {extra}, "
                         f"only in graph {absent}")
    got = induced_graph(rep)
    proper = is_proper_vpg(rep) if rep.mode is Mode.PROPER_VPG else None
    return ValidationReport(
        mode=rep.mode,
        missing=tuple(sorted(g.edges - got.edges)),
        excess=tuple(sorted(got.edges - g.edges)),
        path_classes={v: monotone_class(p) for v, p in rep.paths.items()},
        stats=stats(rep),
        proper=proper,
    )
