import random

import pytest

from epgrid.graph import Graph, MinorRecipe, apply_minor
from epgrid.grid import GridPath, bounding_box
from epgrid.orthogonal import (DrawingError, OrthogonalDrawing, check_drawing, orth_to_epg,
                               route_copies)
from epgrid.representation import induced_graph_epg

import generators as gen


def single_edge() -> OrthogonalDrawing:
    return OrthogonalDrawing({0: (0, 0), 1: (1, 0)}, {(0, 1): GridPath(((0, 0), (1, 0)))})


def assert_represents(d, g, r=None, open_paths=True):
    rep = orth_to_epg(d, g, r, open_paths)
    target = apply_minor(g, r or MinorRecipe())
    assert induced_graph_epg(rep) == target
    box = d.box()
    assert bounding_box(rep.paths.values()).fits(2 * box.width, 2 * box.height)
    assert all(p.closed != open_paths for p in rep.paths.values())
    return rep


class TestCheckDrawing:
    def test_valid_grid(self):
        d = gen.grid_graph_drawing(3, 3)
        check_drawing(d, d.graph())

    def test_routes_are_stored_smaller_first(self):
        d = OrthogonalDrawing({0: (0, 0), 1: (1, 0)}, {(1, 0): GridPath(((1, 0), (0, 0)))})
        assert d.edge_route[(0, 1)].corners == ((0, 0), (1, 0))
        assert d.route_from(1, 0).corners == ((1, 0), (0, 0))

    def test_shared_grid_edge(self):
        d = OrthogonalDrawing({0: (0, 0), 1: (2, 0), 2: (1, 1), 3: (3, 1)},
                              {(0, 1): GridPath(((0, 0), (2, 0))),
                               (2, 3): GridPath(((1, 1), (1, 0), (3, 0), (3, 1)))})
        with pytest.raises(DrawingError, match="grid-edge"):
            check_drawing(d)

    def test_route_through_vertex(self):
        d = OrthogonalDrawing({0: (0, 0), 1: (1, 0), 2: (2, 0)},
                              {(0, 2): GridPath(((0, 0), (2, 0)))})
        with pytest.raises(DrawingError, match="passes through"):
            check_drawing(d)

    def test_wrong_endpoint(self):
        d = OrthogonalDrawing({0: (0, 0), 1: (1, 0)}, {(0, 1): GridPath(((0, 0), (0, 1)))})
        with pytest.raises(DrawingError):
            check_drawing(d)

    def test_bends_touching(self):
        d = OrthogonalDrawing({0: (0, 0), 1: (1, 1), 2: (2, 0), 3: (1, -1)},
                              {(0, 1): GridPath(((0, 0), (1, 0), (1, 1))),
                               (2, 3): GridPath(((2, 0), (1, 0), (1, -1)))})
        with pytest.raises(DrawingError, match="without crossing"):
            check_drawing(d)

    def test_degree_five(self):
        pos = {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (-1, 0), 4: (0, -1), 5: (5, 5)}
        routes = {(0, v): GridPath(((0, 0), pos[v])) for v in range(1, 5)}
        routes[(0, 5)] = GridPath(((0, 0), (5, 0), (5, 5)))
        with pytest.raises(DrawingError, match="degree 4"):
            check_drawing(OrthogonalDrawing(pos, routes))

    def test_graph_mismatch(self):
        with pytest.raises(DrawingError, match="graph"):
            check_drawing(single_edge(), Graph.from_edges(2, []))


class TestCopies:
    def test_straight_route(self):
        left, right = route_copies(GridPath(((0, 0), (2, 0))))
        # squares are [2x, 2x+1] x [2y, 2y+1]; copies run along their top and bottom rows
        assert left == [(1, 1), (2, 1), (3, 1), (4, 1)]
        assert right == [(1, 0), (2, 0), (3, 0), (4, 0)]


class TestTracing:
    def test_single_edge(self):
        g = single_edge().graph()
        rep = assert_represents(single_edge(), g)
        assert len(rep.paths) == 2

    def test_grid_graph(self):
        d = gen.grid_graph_drawing(3, 3)
        assert_represents(d, d.graph())
        assert_represents(d, d.graph(), open_paths=False)

    def test_grid_contraction(self):
        d = gen.grid_graph_drawing(3, 3)
        r = MinorRecipe(contracted_edges=[(0, 1), (4, 5)])
        assert_represents(d, d.graph(), r)
        assert_represents(d, d.graph(), r, open_paths=False)

    def test_cycle_to_k2(self):
        d = gen.cycle_drawing(4)
        r = MinorRecipe(contracted_edges=[(0, 1), (2, 3)])
        rep = assert_represents(d, d.graph(), r)
        assert len(rep.paths) == 2

    def test_deletions(self):
        d = gen.grid_graph_drawing(2, 3)
        r = MinorRecipe(deleted_vertices=[5], deleted_edges=[(0, 1)])
        assert_represents(d, d.graph(), r)

    def test_random_drawings_and_minors(self):
        rng = random.Random(55)
        for _ in range(40):
            d = gen.random_4graph_drawing(rng, rng.randint(2, 10), p=0.8)
            g = d.graph()
            r = gen.random_recipe(rng, g, rng.randint(0, 3))
            assert_represents(d, g, r, open_paths=rng.random() < 0.5)

    def test_invalid_drawing_is_rejected(self):
        d = OrthogonalDrawing({0: (0, 0), 1: (1, 0)}, {(0, 1): GridPath(((0, 0), (0, 1)))})
        with pytest.raises(DrawingError):
            orth_to_epg(d, d.graph())
