"""Integer-lattice geometry: grid points, unit grid-edges, axis-aligned trails.

A point is a plain ``(x, y)`` tuple of ints.  A grid-edge is the sorted pair
of its two endpoints, so ``((0, 0), (1, 0))`` and ``((1, 0), (0, 0))`` name
the same edge once normalised with :func:`grid_edge`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Tuple

Point = Tuple[int, int]
GridEdge = Tuple[Point, Point]


class MonotoneClass(enum.IntEnum):
    """Monotonicity classes, ordered so that a larger value is a stronger class."""

    NONE = 0
    X = 1
    XY = 2
    XY_PLUS = 3

    @property
    def label(self) -> str:
        return {0: "none", 1: "x", 2: "xy", 3: "xy+"}[int(self)]

    @classmethod
    def from_label(cls, text: str) -> "MonotoneClass":
        for member in cls:
            if member.label == text:
                return member
        raise ValueError(f"unknown monotone class {text!r}")


def grid_edge(p: Point, q: Point) -> GridEdge:
    if abs(p[0] - q[0]) + abs(p[1] - q[1]) != 1:
        raise ValueError(f"{p} and {q} are not at lattice distance 1")
    return (p, q) if p < q else (q, p)


def _sign(a: int) -> int:
    return (a > 0) - (a < 0)


def _canonical_corners(points: Sequence[Point], closed: bool) -> tuple[Point, ...]:
    """Drop repeated points and straight-through corners."""
    pts: list[Point] = []
    for p in points:
        p = (int(p[0]), int(p[1]))
        if not pts or pts[-1] != p:
            pts.append(p)
    if closed:
        while len(pts) > 1 and pts[-1] == pts[0]:
            pts.pop()

    def straight(a: Point, b: Point, c: Point) -> bool:
        d1 = (_sign(b[0] - a[0]), _sign(b[1] - a[1]))
        d2 = (_sign(c[0] - b[0]), _sign(c[1] - b[1]))
        return d1 == d2 and (a[0] == c[0] or a[1] == c[1])

    out: list[Point] = []
    for p in pts:
        while len(out) >= 2 and straight(out[-2], out[-1], p):
            out.pop()
        out.append(p)
    if closed:
        changed = True
        while changed and len(out) >= 3:
            changed = False
            if straight(out[-2], out[-1], out[0]):
                out.pop()
                changed = True
            elif straight(out[-1], out[0], out[1]):
                out.pop(0)
                changed = True
    return tuple(out)


@dataclass(frozen=True)
class GridPath:
    """An axis-aligned lattice trail stored by its corners.

    Corners are canonicalised on construction (duplicate points and collinear
    interior corners are merged), so two paths compare equal exactly when they
    describe the same traversal.  Grid-points may repeat; grid-edges may not.
    """

    corners: tuple[Point, ...]
    closed: bool = False

    def __post_init__(self) -> None:
        corners = _canonical_corners(self.corners, self.closed)
        if not corners:
            raise ValueError("a grid path needs at least one grid-point")
        object.__setattr__(self, "corners", corners)
        ring = list(corners) + ([corners[0]] if self.closed else [])
        for a, b in zip(ring, ring[1:]):
            if a[0] != b[0] and a[1] != b[1]:
                raise ValueError(f"segment {a}-{b} is not axis-aligned")
        if self.closed and len(corners) < 4:
            raise ValueError("a closed grid path needs at least four corners")
        seen: set[GridEdge] = set()
        for e in self._iter_edges():
            if e in seen:
                raise ValueError(f"grid-edge {e[0]}-{e[1]} is used twice")
            seen.add(e)

    @classmethod
    def from_points(cls, points: Iterable[Point], closed: bool = False) -> "GridPath":
        return cls(tuple(points), closed)

    # -- expansion ---------------------------------------------------------

    def points(self) -> list[Point]:
        """Unit-step point sequence.  Closed paths do not repeat the start."""
        out: list[Point] = [self.corners[0]]
        ring = list(self.corners) + ([self.corners[0]] if self.closed else [])
        for a, b in zip(ring, ring[1:]):
            dx, dy = _sign(b[0] - a[0]), _sign(b[1] - a[1])
            x, y = a
            while (x, y) != b:
                x, y = x + dx, y + dy
                out.append((x, y))
        if self.closed:
            out.pop()
        return out

    def _iter_edges(self) -> Iterator[GridEdge]:
        pts = self.points()
        if self.closed:
            pts = pts + [pts[0]]
        for a, b in zip(pts, pts[1:]):
            yield grid_edge(a, b)

    @cached_property
    def edge_set(self) -> frozenset[GridEdge]:
        return frozenset(self._iter_edges())

    @cached_property
    def point_set(self) -> frozenset[Point]:
        return frozenset(self.points())

    def segments(self) -> list[tuple[Point, Point]]:
        ring = list(self.corners) + ([self.corners[0]] if self.closed else [])
        return list(zip(ring, ring[1:]))

    def __len__(self) -> int:
        return len(self.edge_set)

    # -- rigid motions -----------------------------------------------------

    def reversed(self) -> "GridPath":
        return GridPath(tuple(reversed(self.corners)), self.closed)

    def translated(self, dx: int, dy: int) -> "GridPath":
        return GridPath(tuple((x + dx, y + dy) for x, y in self.corners), self.closed)


def unit_edges(p: GridPath) -> frozenset[GridEdge]:
    return p.edge_set


def translate(p: GridPath, dx: int, dy: int) -> GridPath:
    return p.translated(dx, dy)


def _require_open(p: GridPath) -> list[Point]:
    if p.closed:
        raise ValueError("monotonicity is undefined for closed paths")
    return p.points()


def _monotone(values: Sequence[int]) -> int:
    """+1 if non-decreasing, -1 if non-increasing, 2 if constant, 0 otherwise."""
    up = all(a <= b for a, b in zip(values, values[1:]))
    down = all(a >= b for a, b in zip(values, values[1:]))
    if up and down:
        return 2
    return 1 if up else (-1 if down else 0)


def is_x_monotone(p: GridPath) -> bool:
    pts = _require_open(p)
    return _monotone([x for x, _ in pts]) != 0


def is_xy_monotone(p: GridPath) -> bool:
    pts = _require_open(p)
    return _monotone([x for x, _ in pts]) != 0 and _monotone([y for _, y in pts]) != 0


def is_xy_plus_monotone(p: GridPath) -> bool:
    pts = _require_open(p)
    mx = _monotone([x for x, _ in pts])
    my = _monotone([y for _, y in pts])
    if mx == 0 or my == 0:
        return False
    return mx == 2 or my == 2 or mx == my


def monotone_class(p: GridPath) -> MonotoneClass:
    if p.closed:
        return MonotoneClass.NONE
    if is_xy_plus_monotone(p):
        return MonotoneClass.XY_PLUS
    if is_xy_monotone(p):
        return MonotoneClass.XY
    if is_x_monotone(p):
        return MonotoneClass.X
    return MonotoneClass.NONE


@dataclass(frozen=True)
class BoundingBox:
    """Column and row counts of the smallest box holding some grid-points.

    ``width`` counts grid columns ``x_max - x_min + 1``, matching a
    "w x h grid" that has w points per row.
    """

    width: int
    height: int
    origin: Point = field(default=(0, 0))

    @property
    def x_max(self) -> int:
        return self.origin[0] + self.width - 1

    @property
    def y_max(self) -> int:
        return self.origin[1] + self.height - 1

    def fits(self, width: int, height: int) -> bool:
        return self.width <= width and self.height <= height

    def __str__(self) -> str:
        return f"{self.width}x{self.height}"


def bounding_box(paths: Iterable[GridPath]) -> BoundingBox:
    xs: list[int] = []
    ys: list[int] = []
    for p in paths:
        xs.extend(x for x, _ in p.corners)
        ys.extend(y for _, y in p.corners)
    if not xs:
        raise ValueError("bounding box of an empty collection")
    return BoundingBox(max(xs) - min(xs) + 1, max(ys) - min(ys) + 1, (min(xs), min(ys)))
