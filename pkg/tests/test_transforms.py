import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epgrid.constructions import complete_vpg
from epgrid.graph import Graph, complete_graph
from epgrid.grid import GridPath, MonotoneClass, bounding_box, grid_edge, monotone_class
from epgrid.representation import (GridRepresentation, Mode, induced_graph_epg,
                                   induced_graph_vpg, is_proper_vpg)
from epgrid.transforms import (TransformError, bump_transform, crossing_assignment, skew,
                               xyplus_transform)

import generators as gen


def plus() -> GridRepresentation:
    return GridRepresentation({0: GridPath(((0, 1), (2, 1))),
                               1: GridPath(((1, 0), (1, 2)))}, Mode.PROPER_VPG)


K2 = Graph.from_edges(2, [(0, 1)])
EMPTY2 = Graph.from_edges(2, [])


class TestCrossings:
    def test_plus_roles(self):
        c = crossing_assignment(plus(), [(0, 1)])[(0, 1)]
        assert (c.point, c.rightward, c.upward) == ((1, 1), 0, 1)

    def test_smallest_point_is_chosen(self):
        rv = GridRepresentation({0: GridPath(((0, 1), (4, 1))),
                                 1: GridPath(((1, 0), (1, 2), (3, 2), (3, 0)))}, Mode.EPG)
        # the second path runs downward at x = 3, so only (1, 1) is a right/up crossing
        assert crossing_assignment(rv, [(0, 1)])[(0, 1)].point == (1, 1)


class TestBump:
    def test_shared_edge_above_crossing(self):
        out = bump_transform(plus(), K2)
        shared = out.paths[0].edge_set & out.paths[1].edge_set
        assert shared == {grid_edge((2, 2), (2, 3))}
        assert out.paths[0].points() == [(0, 2), (1, 2), (2, 2), (2, 3), (3, 3), (3, 2), (4, 2)]

    def test_non_edge_stays_apart(self):
        out = bump_transform(plus(), EMPTY2)
        assert induced_graph_epg(out).m == 0

    def test_complete_vpg_4(self):
        out = bump_transform(complete_vpg(4), gen.cycle(4))
        assert induced_graph_epg(out) == gen.cycle(4)
        assert bounding_box(out.paths.values()).fits(8, 8)

    def test_closed_paths_are_supported(self):
        rng = random.Random(5)
        for _ in range(30):
            rv, g = gen.vpg_instance(rng, rng.randint(2, 10), "any")
            out = bump_transform(rv, g)
            assert induced_graph_epg(out) == g

    def test_rejects_non_edge(self):
        rv = GridRepresentation({0: GridPath(((0, 0), (1, 0))),
                                 1: GridPath(((5, 5), (6, 5)))}, Mode.PROPER_VPG)
        with pytest.raises(TransformError):
            bump_transform(rv, K2)

    def test_rejects_improper_input(self):
        rv = GridRepresentation({0: GridPath(((0, 0), (2, 0))),
                                 1: GridPath(((1, 0), (3, 0)))}, Mode.PROPER_VPG)
        with pytest.raises(TransformError):
            bump_transform(rv, K2)

    def test_missing_vertex(self):
        with pytest.raises(TransformError):
            bump_transform(plus(), Graph.from_edges(3, [(0, 1)]))


class TestSkew:
    def test_point_map(self):
        out = skew(GridRepresentation({0: GridPath(((1, 1), (2, 1)))}, Mode.PROPER_VPG))
        assert out.paths[0].corners == ((3, 2), (5, 2))

    def test_vertical_step_becomes_zig_zag(self):
        out = skew(GridRepresentation({0: GridPath(((0, 0), (0, 1)))}, Mode.PROPER_VPG))
        assert out.paths[0].points() == [(0, 0), (0, 1), (1, 1), (1, 2)]

    def test_keeps_xy_plus(self):
        out = skew(complete_vpg(6))
        assert all(monotone_class(p) is MonotoneClass.XY_PLUS for p in out.paths.values())

    def test_rejects_non_monotone(self):
        rv = GridRepresentation({0: GridPath(((0, 1), (2, 1), (2, 0)))}, Mode.PROPER_VPG)
        with pytest.raises(TransformError):
            skew(rv)

    def test_preserves_vpg_graph(self):
        rng = random.Random(17)
        for _ in range(200):
            rv = gen.random_proper_vpg(rng, rng.randint(1, 12), "xy+")
            out = skew(rv)
            assert induced_graph_vpg(out) == induced_graph_vpg(rv)
            assert is_proper_vpg(out)


class TestXyPlus:
    def test_plus_example(self):
        out = xyplus_transform(plus(), K2)
        # the crossing (1, 1) maps to (3, 2); the upward path turns right there
        assert out.paths[1].points() == [(2, 0), (2, 1), (3, 1), (3, 2), (4, 2), (4, 3), (4, 4)]
        shared = out.paths[0].edge_set & out.paths[1].edge_set
        assert shared == {grid_edge((3, 2), (4, 2))}
        assert induced_graph_epg(out) == K2

    def test_complete_graphs(self):
        for n in range(1, 9):
            out = xyplus_transform(complete_vpg(n), complete_graph(n))
            assert induced_graph_epg(out) == complete_graph(n)
            assert bounding_box(out.paths.values()).fits(3 * n, 2 * n)

    @settings(max_examples=60)
    @given(st.integers(0, 2**32 - 1), st.integers(1, 12))
    def test_subgraphs_of_random_instances(self, seed, n):
        rng = random.Random(seed)
        rv, g = gen.vpg_instance(rng, n, "xy+")
        out = xyplus_transform(rv, g)
        assert induced_graph_epg(out) == g
        assert all(monotone_class(p) is MonotoneClass.XY_PLUS for p in out.paths.values())

    def test_edge_order_does_not_matter(self):
        rng = random.Random(23)
        for _ in range(50):
            rv, g = gen.vpg_instance(rng, rng.randint(2, 10), "xy+")
            edges = sorted(g.edges)
            shuffled = edges[:]
            rng.shuffle(shuffled)
            assert xyplus_transform(rv, g, edges) == xyplus_transform(rv, g, shuffled)
            assert bump_transform(rv, g, edges) == bump_transform(rv, g, shuffled[::-1])

    def test_rejects_closed_path(self):
        rv = GridRepresentation({0: GridPath(((0, 0), (1, 0), (1, 1), (0, 1)), closed=True)},
                                Mode.PROPER_VPG)
        with pytest.raises(TransformError):
            xyplus_transform(rv, Graph.from_edges(1, []))


class TestSmallExamples:
    def test_unit_horizontal_doubles(self):
        out = skew(GridRepresentation({0: GridPath(((2, 3), (3, 3)))}, Mode.PROPER_VPG))
        assert out.paths[0].corners == ((7, 6), (9, 6))

    def test_bump_empty_subgraph_only_doubles(self):
        out = bump_transform(complete_vpg(3), Graph.from_edges(3, []))
        assert out.paths[2].corners == ((4, 2), (4, 6), (6, 6))
        assert induced_graph_epg(out).m == 0

    def test_xy_plus_empty_subgraph_only_skews(self):
        out = xyplus_transform(complete_vpg(3), Graph.from_edges(3, []))
        assert out == skew(complete_vpg(3)).with_mode(Mode.EPG)
        assert induced_graph_epg(out).m == 0

    def test_random_subgraphs_of_complete(self):
        rng = random.Random(385)
        for n in range(1, 9):
            for _ in range(10):
                g = gen.random_graph(rng, n, rng.random())
                out = xyplus_transform(complete_vpg(n), g)
                assert induced_graph_epg(out) == g
                assert bounding_box(out.paths.values()).fits(3 * n, 2 * n)
