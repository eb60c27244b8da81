from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from paramdiam import (
    clique_modulator_2approx,
    cograph_modulator,
    feedback_edge_set,
    find_induced_p4,
    from_edge_list,
    h_index,
    hub_set,
    induced_subgraph,
    parameter_report,
)
from oracles import has_induced_p4, min_clique_modulator_size
from test_graph import graphs


def is_clique(g, vertices):
    masks = g.neighbor_masks
    vs = list(vertices)
    return all(
        masks[v] >> w & 1 for i, v in enumerate(vs) for w in vs[i + 1:]
    )


class TestFeedbackEdgeSet:
    def test_tree_is_empty(self):
        g = from_edge_list([(0, 1), (1, 2), (1, 3)], 4)
        assert feedback_edge_set(g) == set()

    def test_cycle_drops_one_edge(self):
        g = from_edge_list([(0, 1), (1, 2), (2, 0)], 3)
        assert len(feedback_edge_set(g)) == 1

    @settings(max_examples=120, deadline=None)
    @given(graphs(connected_only=True))
    def test_size_and_acyclic_remainder(self, g):
        fes = feedback_edge_set(g)
        assert len(fes) == g.m - g.n + 1
        remaining = [e for e in g.edges() if e not in fes]
        # spanning tree: right count and still connected
        assert len(remaining) == g.n - 1
        from paramdiam import is_connected

        assert is_connected(from_edge_list(remaining, g.n))


class TestP4:
    def test_path_on_four(self):
        g = from_edge_list([(0, 1), (1, 2), (2, 3)], 4)
        a, b, c, d = find_induced_p4(g)
        assert {a, b, c, d} == {0, 1, 2, 3}

    def test_cycle_on_four_is_free(self):
        g = from_edge_list([(0, 1), (1, 2), (2, 3), (3, 0)], 4)
        assert find_induced_p4(g) is None

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=10))
    def test_detection_matches_exhaustive(self, g):
        found = find_induced_p4(g)
        assert (found is not None) == has_induced_p4(g)
        if found is not None:
            a, b, c, d = found
            masks = g.neighbor_masks
            assert len({a, b, c, d}) == 4
            assert masks[a] >> b & 1 and masks[b] >> c & 1 and masks[c] >> d & 1
            assert not masks[a] >> c & 1
            assert not masks[b] >> d & 1
            assert not masks[a] >> d & 1


class TestCographModulator:
    @settings(max_examples=120, deadline=None)
    @given(graphs(max_n=10))
    def test_remainder_is_p4_free(self, g):
        k = cograph_modulator(g)
        rest = [v for v in range(g.n) if v not in k]
        sub, _ = induced_subgraph(g, rest)
        assert not has_induced_p4(sub)

    def test_p4_free_graph_gives_empty_modulator(self):
        g = from_edge_list([(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (3, 2)], 4)
        assert cograph_modulator(g) == set()


class TestHIndex:
    def test_star(self):
        g = from_edge_list([(0, i) for i in range(1, 5)], 5)
        assert h_index(g) == 1
        assert hub_set(g) == {0}

    def test_clique(self):
        g = from_edge_list([(i, j) for i in range(4) for j in range(i + 1, 4)], 4)
        assert h_index(g) == 3

    @settings(max_examples=120, deadline=None)
    @given(graphs())
    def test_definition(self, g):
        h = h_index(g)
        degs = sorted((g.degree(v) for v in range(g.n)), reverse=True)
        assert sum(1 for d in degs if d >= h) >= h
        assert sum(1 for d in degs if d >= h + 1) < h + 1
        hubs = hub_set(g)
        assert len(hubs) == h
        assert all(g.degree(v) <= h for v in range(g.n) if v not in hubs)


class TestCliqueModulator:
    @settings(max_examples=120, deadline=None)
    @given(graphs(max_n=10))
    def test_remainder_is_clique(self, g):
        k = clique_modulator_2approx(g)
        assert is_clique(g, (v for v in range(g.n) if v not in k))

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=8))
    def test_within_factor_two(self, g):
        assert len(clique_modulator_2approx(g)) <= 2 * min_clique_modulator_size(g)


class TestReport:
    def test_fields(self):
        g = from_edge_list([(0, 1), (0, 2), (1, 2), (2, 3)], 4)
        rep = parameter_report(g)
        assert rep["n"] == 4 and rep["m"] == 4
        assert rep["feedback_edge_number"] == 1
        assert rep["cograph_modulator_size"] == 0
        assert rep["h_index"] == 2
        assert rep["max_degree"] == 3 and rep["min_degree"] == 1
        assert Fraction(rep["average_degree"]) == Fraction(2)
