from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paramdiam import (
    DisconnectedGraphError,
    InvalidModulatorError,
    from_edge_list,
    gen_connected_er,
    hub_set,
    naive_diameter,
    solve_hd,
    truncated_bfs_count,
)
from test_graph import graphs


class TestTruncatedBfs:
    def test_counts_within_depth(self):
        g = from_edge_list([(0, 1), (1, 2), (2, 3)], 4)
        types = ["a", "b", "a", "b"]
        assert truncated_bfs_count(g, 0, 2, types) == Counter({"a": 2, "b": 1})
        assert truncated_bfs_count(g, 0, 0, types) == Counter({"a": 1})
        assert truncated_bfs_count(g, 0, 9, types) == Counter({"a": 2, "b": 2})

    def test_respects_components(self):
        g = from_edge_list([(0, 1)], 3)
        assert truncated_bfs_count(g, 2, 5, ["x", "x", "x"]) == Counter({"x": 1})


class TestSolve:
    def test_star(self):
        g = from_edge_list([(0, i) for i in range(1, 6)], 6)
        assert solve_hd(g) == 2

    def test_path(self):
        g = from_edge_list([(0, 1), (1, 2), (2, 3), (3, 4)], 5)
        assert solve_hd(g) == 4

    def test_single_vertex(self):
        assert solve_hd(from_edge_list([], 1)) == 0

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            solve_hd(from_edge_list([(0, 1)], 3))

    def test_custom_hub_set_validated(self):
        g = from_edge_list([(0, 1), (0, 2), (0, 3), (1, 2)], 4)
        # leaving the degree-3 center out of the hubs is rejected
        with pytest.raises(InvalidModulatorError):
            solve_hd(g, {1, 2})
        assert solve_hd(g, {0, 1}) == naive_diameter(g)

    def test_trace_ends_with_certificate(self):
        events = []
        g = from_edge_list([(0, 1), (1, 2), (2, 3), (3, 4)], 5)
        solve_hd(g, None, events.append)
        assert events[-1]["vertex"] is None  # final pass found no shortfall
        assert events[-1]["e"] == 4

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=12, connected_only=True))
    def test_matches_naive(self, g):
        assert solve_hd(g) == naive_diameter(g)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=9, connected_only=True), st.data())
    def test_larger_hub_sets_stay_exact(self, g, data):
        extra = data.draw(st.sets(st.integers(0, g.n - 1), max_size=3))
        assert solve_hd(g, hub_set(g) | extra) == naive_diameter(g)

    def test_er_family(self):
        for seed in range(30):
            g = gen_connected_er(8 + seed, 0.15 + (seed % 5) * 0.1, seed)
            assert solve_hd(g) == naive_diameter(g)
