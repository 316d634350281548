"""Write SVG figures of the main constructions into a directory.

    python scripts/make_figures.py --out-dir figures
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from epgrid.constructions import complete_vpg, epg_any_graph, pathwidth_epg, pathwidth_vpg
from epgrid.graph import Graph, MinorRecipe, complete_graph
from epgrid.grid import GridPath
from epgrid.intervals import IntervalRepresentation, induced_interval_graph
from epgrid.orthogonal import OrthogonalDrawing, orth_to_epg
from epgrid.representation import GridRepresentation, Mode
from epgrid.svg import RenderStyle, render_svg
from epgrid.transforms import bump_transform, skew, xyplus_transform


@dataclass(frozen=True)
class FigureConfig:
    out_dir: Path = Path("figures")
    cell: int = 24
    n_complete: int = 5


def plus_crossing() -> GridRepresentation:
    return GridRepresentation({0: GridPath(((0, 1), (2, 1))), 1: GridPath(((1, 0), (1, 2)))},
                              Mode.PROPER_VPG)


def grid_drawing(rows: int, cols: int) -> OrthogonalDrawing:
    pos = {r * cols + c: (c, r) for r in range(rows) for c in range(cols)}
    routes = {}
    for v, (x, y) in pos.items():
        if x + 1 < cols:
            routes[(v, v + 1)] = GridPath(((x, y), (x + 1, y)))
        if y + 1 < rows:
            routes[(v, v + cols)] = GridPath(((x, y), (x, y + 1)))
    return OrthogonalDrawing(pos, routes)


def figures(cfg: FigureConfig) -> dict[str, GridRepresentation]:
    k2 = Graph.from_edges(2, [(0, 1)])
    chain = IntervalRepresentation({0: (1, 4), 1: (2, 7), 2: (3, 5), 3: (6, 10),
                                    4: (8, 11), 5: (9, 12)})
    grid = grid_drawing(3, 3)
    return {
        "plus_vpg": plus_crossing(),
        "plus_bump": bump_transform(plus_crossing(), k2),
        "plus_skew": skew(plus_crossing()),
        "plus_xyplus": xyplus_transform(plus_crossing(), k2),
        "complete_vpg": complete_vpg(cfg.n_complete),
        "complete_epg": epg_any_graph(complete_graph(cfg.n_complete)),
        "chain_vpg": pathwidth_vpg(chain).representation,
        "chain_epg": pathwidth_epg(induced_interval_graph(chain), chain),
        "grid_minor": orth_to_epg(grid, grid.graph(), MinorRecipe(contracted_edges=((0, 1),))),
    }


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", type=Path, default=FigureConfig.out_dir)
    parser.add_argument("--cell", type=int, default=FigureConfig.cell)
    args = parser.parse_args(argv)
    cfg = FigureConfig(out_dir=args.out_dir, cell=args.cell)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    style = RenderStyle(cell=cfg.cell)
    for name, rep in figures(cfg).items():
        path = cfg.out_dir / f"{name}.svg"
        path.write_text(render_svg(rep, style), encoding="utf-8")
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
