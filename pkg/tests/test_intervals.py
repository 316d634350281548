import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from epgrid.graph import Graph
from epgrid.intervals import (IntervalRepresentation, PathDecomposition, clique_number,
                              components, decomposition_from_ordering,
                              decomposition_to_intervals, greedy_colour,
                              induced_interval_graph, normalize)

import generators as gen
import oracles

IR = IntervalRepresentation


class TestNormalize:
    def test_rank_remap(self):
        out = normalize(IR({0: (10, 30), 1: (20, 40)}))
        assert out.intervals == {0: (1, 3), 1: (2, 4)}
        assert out.is_normalized()

    def test_touching_intervals_still_meet(self):
        ir = IR({0: (1, 5), 1: (5, 9)})
        out = normalize(ir)
        assert induced_interval_graph(out).has_edge(0, 1)
        assert out.intervals[1][0] < out.intervals[0][1]

    def test_degenerate_interval_rejected(self):
        with pytest.raises(ValueError):
            normalize(IR({0: (7, 7)}))

    def test_reversed_interval_rejected(self):
        with pytest.raises(ValueError):
            IR({0: (3, 1)})

    @given(st.integers(0, 2**32 - 1), st.integers(1, 15))
    def test_preserves_graph(self, seed, n):
        ir = gen.random_fraction_intervals(random.Random(seed), n, allow_points=False)
        out = normalize(ir)
        assert out.is_normalized() and out.has_distinct_endpoints()
        assert induced_interval_graph(out) == induced_interval_graph(ir)
        assert normalize(out) == out


class TestSweeps:
    def test_clique_example(self):
        ir = IR({0: (1, 4), 1: (2, 6), 2: (3, 5), 3: (7, 8)})
        assert clique_number(ir) == 3
        assert induced_interval_graph(ir).edges == {(0, 1), (0, 2), (1, 2)}

    def test_fraction_endpoints(self):
        ir = IR({0: (Fraction(1, 2), Fraction(3, 2)), 1: (Fraction(3, 2), 2)})
        assert clique_number(ir) == 2

    def test_empty(self):
        assert clique_number(IR({})) == 0 and components(IR({})) == []

    @given(st.integers(0, 2**32 - 1), st.integers(1, 20))
    def test_graph_matches_pairwise(self, seed, n):
        ir = gen.random_fraction_intervals(random.Random(seed), n)
        assert induced_interval_graph(ir).edges == oracles.interval_graph_pairwise(ir.intervals)

    def test_greedy_uses_omega_colours(self):
        rng = random.Random(11)
        for _ in range(500):
            ir = gen.random_fraction_intervals(rng, rng.randint(1, 25))
            colour = greedy_colour(ir)
            assert len(set(colour.values())) == clique_number(ir)
            for u, v in induced_interval_graph(ir).edges:
                assert colour[u] != colour[v]

    def test_components_split_on_gaps(self):
        ir = IR({0: (1, 3), 1: (2, 4), 2: (5, 6), 3: (7, 10), 4: (8, 9)})
        assert [c.vertices for c in components(ir)] == [[0, 1], [2], [3, 4]]

    @given(st.integers(0, 2**32 - 1), st.integers(1, 20))
    def test_components_match_graph(self, seed, n):
        ir = gen.random_fraction_intervals(random.Random(seed), n)
        expected = induced_interval_graph(ir).components()
        assert sorted(sorted(c.vertices) for c in components(ir)) == sorted(expected)


class TestDecompositions:
    def test_grid_decomposition(self):
        # row-major 3x3 grid with a sliding window of width 3
        bags = [frozenset(range(i, i + 4)) for i in range(6)]
        pd = PathDecomposition(tuple(bags))
        ir = decomposition_to_intervals(pd)
        assert pd.width == 3 and clique_number(ir) == 4
        assert ir.is_normalized()

    def test_reappearing_vertex(self):
        with pytest.raises(ValueError):
            PathDecomposition((frozenset({0}), frozenset({1}), frozenset({0})))

    def test_empty_bag(self):
        with pytest.raises(ValueError):
            PathDecomposition((frozenset({0}), frozenset()))

    def test_consecutive_bags_touch(self):
        pd = PathDecomposition((frozenset({0, 1}), frozenset({1, 2})))
        g = induced_interval_graph(decomposition_to_intervals(pd))
        assert g.edges == {(0, 1), (1, 2)}

    @given(st.integers(0, 2**32 - 1), st.integers(1, 10))
    def test_ordering_round_trip(self, seed, n):
        rng = random.Random(seed)
        g = gen.random_graph(rng, n, rng.random())
        order = list(g.vertices)
        rng.shuffle(order)
        pd = decomposition_from_ordering(g, order)
        assert pd.covers(g)
        ir = decomposition_to_intervals(pd)
        assert clique_number(ir) == pd.width + 1
        h = induced_interval_graph(ir)
        assert g.edges <= h.edges

    def test_covers_detects_missing_edge(self):
        pd = PathDecomposition((frozenset({0}), frozenset({1})))
        assert not pd.covers(Graph.from_edges(2, [(0, 1)]))


class TestSmallExamples:
    def test_disjoint_and_nested(self):
        disjoint = IR({v: (3 * v + 1, 3 * v + 2) for v in range(5)})
        nested = IR({v: (v + 1, 20 - v) for v in range(5)})
        assert clique_number(disjoint) == 1 and clique_number(nested) == 5
        assert set(greedy_colour(disjoint).values()) == {0}
        assert induced_interval_graph(disjoint).m == 0
        assert induced_interval_graph(nested).m == 10

    def test_greedy_on_omega_three(self):
        ir = IR({0: (1, 4), 1: (2, 6), 2: (3, 5), 3: (7, 8)})
        assert len(set(greedy_colour(ir).values())) == 3

    def test_chain_is_path_plus_chords(self):
        # staggered chain: each interval reaches into the next two
        ir = IR({v: (2 * v + 1, 2 * v + 6) for v in range(6)})
        g = induced_interval_graph(ir)
        assert all(g.has_edge(v, v + 1) for v in range(5))
        assert g.edges == oracles.interval_graph_pairwise(ir.intervals)
        assert len(components(ir)) == 1
        shifted = IR({v + 6: (a + 100, b + 100) for v, (a, b) in ir.intervals.items()})
        both = IR({**ir.intervals, **shifted.intervals})
        assert [c.vertices for c in components(both)] == [list(range(6)), list(range(6, 12))]

    def test_single_bag(self):
        ir = decomposition_to_intervals(PathDecomposition((frozenset({0, 1, 2}),)))
        assert clique_number(ir) == 3 and induced_interval_graph(ir).m == 3
