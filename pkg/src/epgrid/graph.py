"""Simple undirected graphs and the surgeries used on them.

Vertices are non-negative ints.  Operations that invent vertices (subdivision,
splitting, contraction) hand out ids continuing after the largest id in use,
so results are deterministic.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: frozenset[Edge]

    def __init__(self, vertices: Iterable[int], edges: Iterable[Sequence[int]] = ()) -> None:
        verts = tuple(sorted(set(int(v) for v in vertices)))
        vset = set(verts)
        es: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            es.add(edge_key(u, v))
        if any(v < 0 for v in verts):
            raise GraphError("vertex ids must be non-negative")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(es))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(range(n), edges)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _adj(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def next_id(self) -> int:
        return self.vertices[-1] + 1 if self.vertices else 0

    def induced(self, keep: Iterable[int]) -> "Graph":
        ks = set(keep)
        return Graph(ks, [e for e in self.edges if e[0] in ks and e[1] in ks])

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        return Graph((mapping[v] for v in self.vertices),
                     [(mapping[u], mapping[v]) for u, v in self.edges])

    def is_subgraph_of(self, other: "Graph") -> bool:
        return set(self.vertices) <= set(other.vertices) and self.edges <= other.edges

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps: list[list[int]] = []
        for s in self.vertices:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def triangle_free(g: Graph) -> bool:
    for u, v in g.edges:
        if set(g.neighbours(u)) & set(g.neighbours(v)):
            return False
    return True


def is_bipartite(g: Graph) -> bool:
    colour: dict[int, int] = {}
    for s in g.vertices:
        if s in colour:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbours(u):
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def subdivide_all_edges(g: Graph) -> Graph:
    """Replace every edge by a path of length two through a new vertex."""
    nxt = g.next_id()
    edges: list[Edge] = []
    for i, (u, v) in enumerate(g.sorted_edges()):
        s = nxt + i
        edges.append((u, s))
        edges.append((v, s))
    return Graph(list(g.vertices) + list(range(nxt, nxt + g.m)), edges)


def split_to_4graph(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Split vertices of degree >= 5 until the maximum degree is at most 4.

    Each split moves the three smallest-id neighbours of ``v`` to a fresh
    vertex ``v'`` adjacent to ``v``; the degree of ``v`` drops by two.  The
    returned map sends every vertex of the result to the original vertex it
    came from, so contracting all ``(v, v')`` edges gives back ``g``.
    """
    adj: dict[int, set[int]] = {v: set(g.neighbours(v)) for v in g.vertices}
    origin = {v: v for v in g.vertices}
    nxt = g.next_id()
    for v in g.vertices:
        while len(adj[v]) >= 5:
            moved = sorted(adj[v])[:3]
            fresh = nxt
            nxt += 1
            adj[fresh] = set()
            origin[fresh] = origin[v]
            for w in moved:
                adj[v].discard(w)
                adj[w].discard(v)
                adj[w].add(fresh)
                adj[fresh].add(w)
            adj[v].add(fresh)
            adj[fresh].add(v)
    edges = [(u, w) for u, ns in adj.items() for w in ns if u < w]
    return Graph(adj.keys(), edges), origin


@dataclass(frozen=True)
class Orientation:
    """Direction of every edge, keyed by the sorted edge."""

    direction: Mapping[Edge, tuple[int, int]]

    def head(self, e: Edge) -> int:
        return self.direction[edge_key(*e)][1]

    def tail(self, e: Edge) -> int:
        return self.direction[edge_key(*e)][0]

    def out_degree(self, v: int) -> int:
        return sum(1 for t, _ in self.direction.values() if t == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for _, h in self.direction.values() if h == v)

    def arcs(self) -> list[tuple[int, int]]:
        return [self.direction[e] for e in sorted(self.direction)]


def eulerian_circuit(g: Graph, start: int) -> list[int]:
    """Hierholzer's algorithm; neighbours are tried in ascending id order."""
    remaining: dict[int, list[int]] = {v: list(reversed(g.neighbours(v))) for v in g.vertices}
    used: set[Edge] = set()
    stack = [start]
    circuit: list[int] = []
    while stack:
        u = stack[-1]
        nbrs = remaining[u]
        while nbrs and edge_key(u, nbrs[-1]) in used:
            nbrs.pop()
        if nbrs:
            w = nbrs.pop()
            used.add(edge_key(u, w))
            stack.append(w)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    return circuit


def orient_with_out_edges(g: Graph) -> Orientation:
    """Orient a connected 4-graph so every degree-4 vertex has an out-edge.

    A 4-regular graph is oriented along an Eulerian circuit.  Otherwise a BFS
    tree rooted at the smallest-id vertex of degree <= 3 is directed towards
    the root and every non-tree edge points from its lower to its higher id.
    """
    if g.max_degree() > 4:
        raise GraphError("orientation needs maximum degree at most 4")
    if not g.is_connected():
        raise GraphError("orientation needs a connected graph")
    direction: dict[Edge, tuple[int, int]] = {}
    if g.n == 0:
        return Orientation(direction)
    if all(g.degree(v) == 4 for v in g.vertices):
        walk = eulerian_circuit(g, g.vertices[0])
        for a, b in zip(walk, walk[1:]):
            direction[edge_key(a, b)] = (a, b)
        return Orientation(direction)
    root = next(v for v in g.vertices if g.degree(v) <= 3)
    parent = {root: root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.neighbours(u):
            if w not in parent:
                parent[w] = u
                direction[edge_key(u, w)] = (w, u)
                queue.append(w)
    for u, v in g.edges:
        direction.setdefault((u, v), (u, v))
    return Orientation(direction)


class MinorError(ValueError):
    pass


@dataclass(frozen=True)
class MinorRecipe:
    """Deletions followed by an ordered list of contractions.

    Contraction ``i`` creates a vertex whose id is ``name_map[i]`` if given,
    otherwise the next unused id.  A named id may be one of the two merged
    vertices, so ``contract v v'`` can keep the name ``v``.  Later
    contractions may refer to the new vertex.
    """

    deleted_vertices: frozenset[int] = frozenset()
    deleted_edges: frozenset[Edge] = frozenset()
    contracted_edges: tuple[Edge, ...] = ()
    name_map: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "deleted_vertices", frozenset(self.deleted_vertices))
        object.__setattr__(self, "deleted_edges",
                           frozenset(edge_key(*e) for e in self.deleted_edges))
        object.__setattr__(self, "contracted_edges",
                           tuple((int(u), int(v)) for u, v in self.contracted_edges))

    @property
    def is_empty(self) -> bool:
        return not (self.deleted_vertices or self.deleted_edges or self.contracted_edges)


@dataclass(frozen=True)
class MinorTrace:
    """Result of applying a recipe, with the bookkeeping the tracers need.

    ``branch`` maps each vertex of the minor to the original vertices merged
    into it.  ``steps[i]`` is ``(a, b, fresh, e)``: contraction ``i`` merged
    ``a`` and ``b`` into ``fresh`` and is realised by the original edge ``e``.
    ``edge_witness`` maps each minor edge to one original edge producing it.
    """

    base: Graph
    minor: Graph
    branch: dict[int, frozenset[int]]
    steps: tuple[tuple[int, int, int, Edge], ...]
    edge_witness: dict[Edge, Edge]

    @property
    def tree_edges(self) -> tuple[Edge, ...]:
        return tuple(s[3] for s in self.steps)

    def needed_edges(self) -> frozenset[Edge]:
        return frozenset(self.tree_edges) | frozenset(self.edge_witness.values())


def trace_minor(g: Graph, r: MinorRecipe) -> MinorTrace:
    for e in sorted(r.deleted_edges):
        if e not in g.edges:
            raise MinorError(f"delete-edge {e[0]} {e[1]}: no such edge")
    for v in sorted(r.deleted_vertices):
        if v not in g.vertices:
            raise MinorError(f"delete-vertex {v}: no such vertex")
    base_edges = [e for e in g.edges
                  if e not in r.deleted_edges
                  and e[0] not in r.deleted_vertices and e[1] not in r.deleted_vertices]
    base = Graph([v for v in g.vertices if v not in r.deleted_vertices], base_edges)

    branch: dict[int, frozenset[int]] = {v: frozenset([v]) for v in base.vertices}
    adj: dict[int, set[int]] = {v: set(base.neighbours(v)) for v in base.vertices}
    used_ids = set(g.vertices)
    nxt = g.next_id()
    steps: list[tuple[int, int, int, Edge]] = []
    for step, (a, b) in enumerate(r.contracted_edges):
        if a not in adj or b not in adj:
            raise MinorError(f"contract {a} {b} (step {step}): vertex does not exist")
        if b not in adj[a]:
            raise MinorError(f"contract {a} {b} (step {step}): not an edge")
        if step in r.name_map:
            fresh = int(r.name_map[step])
            if fresh in used_ids and fresh not in (a, b):
                raise MinorError(f"contract {a} {b} (step {step}): id {fresh} already used")
        else:
            while nxt in used_ids:
                nxt += 1
            fresh = nxt
        used_ids.add(fresh)
        realised = min(edge_key(x, y) for x in branch[a] for y in base.neighbours(x)
                       if y in branch[b])
        steps.append((a, b, fresh, realised))
        merged = (adj.pop(a) | adj.pop(b)) - {a, b}
        for w in merged:
            adj[w].discard(a)
            adj[w].discard(b)
            adj[w].add(fresh)
        adj[fresh] = merged
        branch[fresh] = branch.pop(a) | branch.pop(b)
    minor = Graph(adj.keys(), [(u, w) for u, ns in adj.items() for w in ns if u < w])
    owner = {x: v for v, members in branch.items() for x in members}
    witness: dict[Edge, Edge] = {}
    for e in sorted(base.edges):
        key = edge_key(owner[e[0]], owner[e[1]])
        if key[0] != key[1]:
            witness.setdefault(key, e)
    return MinorTrace(base, minor, branch, tuple(steps), witness)


def apply_minor(g: Graph, r: MinorRecipe) -> Graph:
    """Delete edges, then vertices, then contract in recipe order."""
    return trace_minor(g, r).minor
