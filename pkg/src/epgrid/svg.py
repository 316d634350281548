"""Static SVG figures of grid representations.

Each path is one polyline.  Where several paths use the same grid-edge they
are drawn side by side, shifted perpendicular to the edge in order of vertex
id, so shared edges stay visible.
"""
from __future__ import annotations

import colorsys
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping

from .grid import GridEdge, bounding_box, grid_edge
from .representation import GridRepresentation, stats


def default_colour(v: int) -> str:
    hue = (v * 0.618033988749895) % 1.0
    r, g, b = colorsys.hls_to_rgb(hue, 0.42, 0.75)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


@dataclass(frozen=True)
class RenderStyle:
    cell: int = 24
    colours: Mapping[int, str] = field(default_factory=dict)
    offset: float | None = None
    labels: bool = True
    grid_dots: bool = True
    stroke_width: float = 2.0
    margin: int = 16

    def __post_init__(self) -> None:
        if self.cell < 4:
            raise ValueError(f"cell size must be at least 4, got {self.cell}")
        if self.offset is not None and self.offset < 0:
            raise ValueError("offset must be non-negative")

    def colour(self, v: int) -> str:
        return self.colours.get(v, default_colour(v))

    def resolved_offset(self, multiplicity: int) -> float:
        """The pixel offset to use; ``None`` picks ``cell / (c + 2)``."""
        limit = self.cell / (max(multiplicity, 1) + 1)
        if self.offset is None:
            return self.cell / (max(multiplicity, 1) + 2)
        if not self.offset < limit:
            raise ValueError(f"offset {self.offset} must be below cell / (c + 1) = {limit:g} "
                             f"for multiplicity {multiplicity}")
        return self.offset


def _fmt(x: float) -> str:
    text = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def _shares(rep: GridRepresentation) -> dict[GridEdge, list[int]]:
    owners: dict[GridEdge, list[int]] = defaultdict(list)
    for v, p in rep.paths.items():
        for e in p.edge_set:
            owners[e].append(v)
    return owners


def render_svg(rep: GridRepresentation, style: RenderStyle | None = None) -> str:
    style = style or RenderStyle()
    head = '<?xml version="1.0" encoding="UTF-8"?>\n'
    if not rep.paths:
        w = h = 2 * style.margin
        return (head + f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
                f'viewBox="0 0 {w} {h}">\n</svg>\n')
    offset = style.resolved_offset(stats(rep).multiplicity)
    box = bounding_box(rep.paths.values())
    cell, m = style.cell, style.margin
    width = (box.width - 1) * cell + 2 * m
    height = (box.height - 1) * cell + 2 * m

    def sx(x: float) -> float:
        return m + (x - box.origin[0]) * cell

    def sy(y: float) -> float:
        return m + (box.y_max - y) * cell

    owners = _shares(rep)
    out = [head,
           f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">\n',
           f'<rect width="{width}" height="{height}" fill="white"/>\n']
    if style.grid_dots:
        out.append('<g fill="#bbbbbb">\n')
        for y in range(box.origin[1], box.y_max + 1):
            for x in range(box.origin[0], box.x_max + 1):
                out.append(f'<circle cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="1"/>\n')
        out.append("</g>\n")
    for v, p in rep.paths.items():
        pts = p.points()
        if p.closed:
            pts = pts + [pts[0]]
        coords: list[tuple[float, float]] = []
        if len(pts) == 1:
            coords.append((sx(pts[0][0]), sy(pts[0][1])))
        for a, b in zip(pts, pts[1:]):
            sharers = owners[grid_edge(a, b)]
            shift = (sharers.index(v) - (len(sharers) - 1) / 2) * offset
            # horizontal edges move up or down, vertical ones left or right
            dx, dy = (0.0, -shift) if a[1] == b[1] else (shift, 0.0)
            for q in (a, b):
                c = (sx(q[0]) + dx, sy(q[1]) + dy)
                if not coords or coords[-1] != c:
                    coords.append(c)
        colour = style.colour(v)
        if len(coords) == 1:
            x, y = coords[0]
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(style.stroke_width * 1.5)}" '
                       f'fill="{colour}" data-vertex="{v}"/>\n')
        else:
            body = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in coords)
            out.append(f'<polyline points="{body}" fill="none" stroke="{colour}" '
                       f'stroke-width="{_fmt(style.stroke_width)}" stroke-linejoin="round" '
                       f'data-vertex="{v}"/>\n')
        if style.labels:
            x, y = coords[0]
            out.append(f'<text x="{_fmt(x + 2)}" y="{_fmt(y - 3)}" font-family="sans-serif" '
                       f'font-size="{_fmt(max(cell * 0.45, 6))}" fill="{colour}">{v}</text>\n')
    out.append("</svg>\n")
    return "".join(out)

