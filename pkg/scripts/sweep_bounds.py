"""Measure grid sizes of both constructions on random inputs.

For the any-graph layout the box is compared with 3n x 2n.  For the
pathwidth pipeline the height is compared with 8k + 8 and the width with
both 4n + 4k + 4 and 8n + 4k + 4; the ratio ``width / (4n + 4k + 4)`` is
reported so the gap between the two is visible.

    python scripts/sweep_bounds.py --cases 100 --out sweep.json
"""
from __future__ import annotations

import argparse
import json
import random
import statistics
import sys
import time
from dataclasses import asdict, dataclass

from epgrid.bounds import all_bounds
from epgrid.constructions import epg_any_graph, pathwidth_epg
from epgrid.graph import Graph
from epgrid.grid import bounding_box
from epgrid.intervals import (IntervalRepresentation, clique_number, induced_interval_graph,
                              normalize)
from epgrid.representation import validate


@dataclass(frozen=True)
class SweepConfig:
    seed: int = 4004
    cases: int = 100
    max_n_complete: int = 14
    max_n_pathwidth: int = 60
    max_k: int = 5
    edge_keep: float = 0.6


def random_interval_supergraph(rng: random.Random, n: int, omega: int) -> IntervalRepresentation:
    """Staggered intervals with at most ``omega`` alive at once, then rank-normalized."""
    intervals, alive, t = {}, [], 0
    for v in range(n):
        t += 1
        while len(alive) >= omega or (alive and rng.random() < 0.3):
            u = alive.pop(rng.randrange(len(alive)))
            intervals[u] = (intervals[u][0], t)
            t += 1
        intervals[v] = (t, None)
        alive.append(v)
    for u in alive:
        t += 1
        intervals[u] = (intervals[u][0], t)
    return normalize(IntervalRepresentation(intervals))


def keep_edges(rng: random.Random, g: Graph, p: float) -> Graph:
    return Graph(g.vertices, [e for e in g.edges if rng.random() < p])


def run(cfg: SweepConfig) -> dict:
    rng = random.Random(cfg.seed)
    rows = []
    for i in range(cfg.cases):
        n = rng.randint(1, cfg.max_n_complete)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                 if rng.random() < 0.5])
        rep = epg_any_graph(g)
        box = bounding_box(rep.paths.values())
        rows.append({"method": "complete", "n": n, "m": g.m, "width": box.width,
                     "height": box.height, "exact": validate(rep, g).exact,
                     "fits": box.fits(3 * n, 2 * n),
                     "bounds_hold": all(b.holds for b in all_bounds(rep, g))})

        k = 1 + i % cfg.max_k
        n = rng.randint(k + 1, cfg.max_n_pathwidth)
        ir = random_interval_supergraph(rng, n, k + 1)
        k = clique_number(ir) - 1
        g = keep_edges(rng, induced_interval_graph(ir), cfg.edge_keep)
        start = time.perf_counter()
        rep = pathwidth_epg(g, ir)
        seconds = time.perf_counter() - start
        box = bounding_box(rep.paths.values())
        narrow = 4 * n + 4 * k + 4
        rows.append({"method": "pathwidth", "n": n, "k": k, "m": g.m, "width": box.width,
                     "height": box.height, "exact": validate(rep, g).exact,
                     "height_ok": box.height <= 8 * k + 8,
                     "width_ok_narrow": box.width <= narrow,
                     "width_ok_wide": box.width <= 8 * n + 4 * k + 4,
                     "width_ratio": round(box.width / narrow, 4), "seconds": round(seconds, 4)})
    pw = [r for r in rows if r["method"] == "pathwidth"]
    ratios = [r["width_ratio"] for r in pw]
    summary = {
        "config": asdict(cfg),
        "complete_all_exact_and_fit": all(r["exact"] and r["fits"] for r in rows
                                          if r["method"] == "complete"),
        "pathwidth_all_exact": all(r["exact"] for r in pw),
        "pathwidth_height_ok": all(r["height_ok"] for r in pw),
        "pathwidth_width_ok_narrow": sum(r["width_ok_narrow"] for r in pw),
        "pathwidth_width_ok_wide": sum(r["width_ok_wide"] for r in pw),
        "width_ratio_min": min(ratios),
        "width_ratio_median": statistics.median(ratios),
        "width_ratio_max": max(ratios),
        "cases": len(pw),
    }
    return {"summary": summary, "rows": rows}


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=SweepConfig.seed)
    parser.add_argument("--cases", type=int, default=SweepConfig.cases)
    parser.add_argument("--out", help="write rows and summary as JSON")
    args = parser.parse_args(argv)
    result = run(SweepConfig(seed=args.seed, cases=args.cases))
    json.dump(result["summary"], sys.stdout, indent=2)
    sys.stdout.write("\n")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(result, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
