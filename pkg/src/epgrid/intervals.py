"""Interval representations, sweeps over them, and path decompositions.

All intervals are closed.  Endpoint sweeps order events by
``(value, is_right_end, vertex)`` so that touching intervals count as
intersecting.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .graph import Edge, Graph, edge_key

Number = int | Fraction


@dataclass(frozen=True)
class IntervalRepresentation:
    intervals: Mapping[int, tuple[Number, Number]]

    def __post_init__(self) -> None:
        ivs = {}
        for v in sorted(self.intervals):
            lo, hi = self.intervals[v]
            if lo > hi:
                raise ValueError(f"interval of {v} has left end {lo} > right end {hi}")
            ivs[v] = (lo, hi)
        object.__setattr__(self, "intervals", ivs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalRepresentation):
            return NotImplemented
        return dict(self.intervals) == dict(other.intervals)

    def __hash__(self) -> int:
        return hash(tuple(self.intervals.items()))

    @property
    def vertices(self) -> list[int]:
        return list(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def left(self, v: int) -> Number:
        return self.intervals[v][0]

    def right(self, v: int) -> Number:
        return self.intervals[v][1]

    def restricted(self, keep: Iterable[int]) -> "IntervalRepresentation":
        ks = set(keep)
        return IntervalRepresentation({v: iv for v, iv in self.intervals.items() if v in ks})

    def is_normalized(self) -> bool:
        ends = [e for iv in self.intervals.values() for e in iv]
        return (all(isinstance(e, int) for e in ends)
                and all(lo < hi for lo, hi in self.intervals.values())
                and sorted(ends) == list(range(1, len(ends) + 1)))

    def has_distinct_endpoints(self) -> bool:
        ends = [e for iv in self.intervals.values() for e in iv]
        return len(set(ends)) == len(ends)


def _events(ir: IntervalRepresentation) -> list[tuple[Number, int, int]]:
    evs = []
    for v, (lo, hi) in ir.intervals.items():
        evs.append((lo, 0, v))
        evs.append((hi, 1, v))
    evs.sort()
    return evs


def normalize(ir: IntervalRepresentation) -> IntervalRepresentation:
    """Rank-remap endpoints onto ``{1, ..., 2n}``, keeping closed intersections."""
    for v, (lo, hi) in ir.intervals.items():
        if not lo < hi:
            raise ValueError(f"interval of {v} is [{lo}, {hi}]; need left < right")
    rank: dict[tuple[int, int], int] = {}
    for i, (_, side, v) in enumerate(_events(ir), start=1):
        rank[(v, side)] = i
    return IntervalRepresentation({v: (rank[(v, 0)], rank[(v, 1)]) for v in ir.intervals})


def require_normalized(ir: IntervalRepresentation) -> None:
    if not ir.is_normalized():
        raise ValueError("interval representation is not normalized to {1..2n}")


def induced_interval_graph(ir: IntervalRepresentation) -> Graph:
    active: set[int] = set()
    edges: set[Edge] = set()
    for _, side, v in _events(ir):
        if side == 0:
            edges.update(edge_key(v, w) for w in active)
            active.add(v)
        else:
            active.discard(v)
    return Graph(ir.intervals.keys(), edges)


def clique_number(ir: IntervalRepresentation) -> int:
    best = depth = 0
    for _, side, _ in _events(ir):
        depth += 1 if side == 0 else -1
        best = max(best, depth)
    return best


def greedy_colour(ir: IntervalRepresentation) -> dict[int, int]:
    """First-fit by left endpoint; on interval graphs this uses exactly omega colours."""
    colour: dict[int, int] = {}
    free: list[int] = []
    used = 0
    for _, side, v in _events(ir):
        if side == 0:
            if free:
                free.sort()
                colour[v] = free.pop(0)
            else:
                colour[v] = used
                used += 1
        else:
            free.append(colour[v])
    return colour


def components(ir: IntervalRepresentation) -> list[IntervalRepresentation]:
    groups: list[list[int]] = []
    reach: Number | None = None
    for v in sorted(ir.intervals, key=lambda u: (ir.intervals[u][0], u)):
        lo, hi = ir.intervals[v]
        if reach is None or lo > reach:
            groups.append([v])
            reach = hi
        else:
            groups[-1].append(v)
            reach = max(reach, hi)
    return [ir.restricted(g) for g in groups]


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        bags = tuple(frozenset(int(v) for v in b) for b in self.bags)
        object.__setattr__(self, "bags", bags)
        seen_done: set[int] = set()
        prev: frozenset[int] = frozenset()
        for i, bag in enumerate(bags):
            if not bag:
                raise ValueError(f"bag {i} is empty")
            back = bag & seen_done
            if back:
                raise ValueError(f"vertex {min(back)} reappears in bag {i} after leaving")
            seen_done |= prev - bag
            prev = bag

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    @property
    def vertices(self) -> list[int]:
        return sorted(set().union(*self.bags)) if self.bags else []

    def covers(self, g: Graph) -> bool:
        if not set(g.vertices) <= set(self.vertices):
            return False
        return all(any(u in b and v in b for b in self.bags) for u, v in g.edges)


def decomposition_to_intervals(pd: PathDecomposition) -> IntervalRepresentation:
    """Vertex ``v`` gets ``[first bag, last bag + 1/2]``, then endpoints are ranked."""
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, bag in enumerate(pd.bags):
        for v in bag:
            first.setdefault(v, i)
            last[v] = i
    half = Fraction(1, 2)
    return normalize(IntervalRepresentation({v: (Fraction(first[v]), last[v] + half)
                                             for v in first}))


def decomposition_from_ordering(g: Graph, order: Sequence[int]) -> PathDecomposition:
    """Bag ``i`` holds ``order[i]`` plus earlier vertices with a neighbour at ``>= i``."""
    pos = {v: i for i, v in enumerate(order)}
    last_need = {v: max([pos[v]] + [pos[w] for w in g.neighbours(v)]) for v in order}
    bags = []
    for i, v in enumerate(order):
        bags.append(frozenset([v] + [u for u in order[:i] if last_need[u] >= i]))
    return PathDecomposition(tuple(bags))

