import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paramdiam import (
    UNREACHABLE,
    ApspMatrix,
    DisconnectedGraphError,
    EdgeListParseError,
    InvalidModulatorError,
    apsp_by_bfs,
    clique_modulator_2approx,
    combine_apsp,
    from_edge_list,
    induced_subgraph,
    load_apsp,
    naive_diameter,
    save_apsp,
    solve_clique_modulator,
)
from oracles import floyd_warshall
from test_graph import graphs


def base_matrix(g, k_set):
    rest = [v for v in range(g.n) if v not in k_set]
    sub, order = induced_subgraph(g, rest)
    base = apsp_by_bfs(sub)
    return ApspMatrix(tuple(order), base.dist)


class TestApspByBfs:
    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=10))
    def test_matches_floyd(self, g):
        mat = apsp_by_bfs(g)
        ref = floyd_warshall(g)
        for i in range(g.n):
            for j in range(g.n):
                want = UNREACHABLE if ref[i][j] == float("inf") else int(ref[i][j])
                assert mat.dist[i, j] == want

    def test_diameter_rejects_unreachable(self):
        mat = apsp_by_bfs(from_edge_list([(0, 1)], 3))
        with pytest.raises(DisconnectedGraphError):
            mat.diameter()


class TestCombine:
    def test_path_through_deleted_vertex(self):
        g = from_edge_list([(0, 1), (1, 2)], 3)
        full = combine_apsp(g, {1}, base_matrix(g, {1}))
        assert full.dist[0, 2] == 2
        assert full.diameter() == 2

    def test_rejects_wrong_order(self):
        g = from_edge_list([(0, 1), (1, 2)], 3)
        bad = ApspMatrix((0, 1), np.zeros((2, 2), dtype=np.int64))
        with pytest.raises(InvalidModulatorError):
            combine_apsp(g, {1}, bad)

    @settings(max_examples=120, deadline=None)
    @given(graphs(max_n=10), st.data())
    def test_matches_direct_apsp(self, g, data):
        k = data.draw(st.sets(st.integers(0, g.n - 1), max_size=min(4, g.n)))
        full = combine_apsp(g, k, base_matrix(g, k))
        assert (full.dist == apsp_by_bfs(g).dist).all()


class TestCliqueSolver:
    def test_clique_alone(self):
        g = from_edge_list([(0, 1), (1, 2), (0, 2)], 3)
        assert solve_clique_modulator(g, set()) == 1

    def test_single_vertex(self):
        assert solve_clique_modulator(from_edge_list([], 1), set()) == 0

    def test_rejects_non_clique_remainder(self):
        g = from_edge_list([(0, 1), (1, 2)], 3)
        with pytest.raises(InvalidModulatorError):
            solve_clique_modulator(g, set())

    def test_path_with_modulator(self):
        g = from_edge_list([(0, 1), (1, 2), (2, 3)], 4)
        assert solve_clique_modulator(g, {0, 1}) == 3

    @settings(max_examples=120, deadline=None)
    @given(graphs(max_n=10, connected_only=True))
    def test_default_modulator_matches_naive(self, g):
        assert solve_clique_modulator(g) == naive_diameter(g)

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=9, connected_only=True), st.data())
    def test_superset_modulators_stay_exact(self, g, data):
        base = clique_modulator_2approx(g)
        extra = data.draw(st.sets(st.integers(0, g.n - 1), max_size=3))
        assert solve_clique_modulator(g, base | extra) == naive_diameter(g)


class TestSerialization:
    def test_round_trip(self, tmp_path):
        g = from_edge_list([(0, 1), (1, 2), (0, 3)], 4)
        mat = apsp_by_bfs(g)
        path = str(tmp_path / "m.apsp")
        save_apsp(mat, path)
        again = load_apsp(path)
        assert again.order == mat.order
        assert (again.dist == mat.dist).all()

    def test_unreachable_survives(self, tmp_path):
        mat = apsp_by_bfs(from_edge_list([(0, 1)], 3))
        path = str(tmp_path / "m.apsp")
        save_apsp(mat, path)
        assert load_apsp(path).dist[0, 2] == UNREACHABLE

    def test_bad_header(self, tmp_path):
        path = tmp_path / "bad.apsp"
        path.write_bytes(b"NOPE 3\n" + b"\0" * 72)
        with pytest.raises(EdgeListParseError):
            load_apsp(str(path))

    def test_truncated_payload(self, tmp_path):
        path = tmp_path / "short.apsp"
        path.write_bytes(b"APSP 3\n" + b"\0" * 10)
        with pytest.raises(EdgeListParseError):
            load_apsp(str(path))
