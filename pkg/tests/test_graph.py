import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hopspan.generators import gnp
from hopspan.graph import (
    UNREACHABLE,
    Graph,
    GraphError,
    ParseError,
    all_pairs_distances,
    aspect_ratio,
    format_graph,
    hop_bounded_all_pairs,
    hop_bounded_sssp,
    overlay,
    parse_graph,
    sssp,
)
from oracles import brute_distances, brute_hops
from strategies import small_graphs


def unit_cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def unit_path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


TRIANGLE = Graph(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)], weighted=True)


class TestParse:
    def test_unit_path(self):
        g = parse_graph("3 2 unweighted\n0 1\n1 2\n")
        assert g == unit_path(3)
        assert not g.weighted

    def test_weighted_edge(self):
        g = parse_graph("2 1 weighted\n0 1 2.5")
        assert g.edges == ((0, 1, 2.5),)

    def test_weight_below_one(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_graph("2 1 weighted\n0 1 0.5")

    def test_comments_and_blank_lines(self):
        g = parse_graph("# header next\n\n3 1 unweighted  # trailing\n# skip\n2 0\n")
        assert g.edges == ((0, 2, 1),)

    @pytest.mark.parametrize(
        "text,needle",
        [
            ("", "empty"),
            ("3 1 directed\n0 1", "header"),
            ("3 2 unweighted\n0 1", "announces 2"),
            ("3 1 unweighted\n0 3", "out of range"),
            ("3 1 unweighted\n1 1", "self-loop"),
            ("3 2 unweighted\n0 1\n1 0", "duplicate"),
            ("3 1 unweighted\n0 1 2", "non-unit"),
            ("3 1 weighted\n0 x 2", "integers"),
            ("3 1 weighted\n0 1 heavy", "bad weight"),
        ],
    )
    def test_errors(self, text, needle):
        with pytest.raises(ParseError, match=needle):
            parse_graph(text)

    @given(small_graphs())
    def test_round_trip(self, g):
        assert parse_graph(format_graph(g)) == g

    def test_constructor_rejects_bad_edges(self):
        with pytest.raises(GraphError):
            Graph(2, [(0, 1, 0.5)], weighted=True)
        with pytest.raises(GraphError):
            Graph(2, [(0, 2)])


class TestSSSP:
    def test_unit_cycle(self):
        assert sssp(unit_cycle(4), 0).dist == [0, 1, 2, 1]

    def test_weighted_triangle(self):
        assert sssp(TRIANGLE, 0).dist == [0, 1, 3]

    def test_gnp_matches_enumeration(self):
        g = gnp(10, 0.5, seed=1)
        want = brute_distances(g.n, g.edges)
        for s in range(g.n):
            assert sssp(g, s).dist == want[s]

    def test_unreachable(self):
        g = Graph(3, [(0, 1)])
        assert sssp(g, 0).dist[2] == UNREACHABLE

    def test_bad_source(self):
        with pytest.raises(GraphError):
            sssp(unit_path(3), 5)

    @given(small_graphs(), st.data())
    def test_matches_enumeration(self, g, data):
        s = data.draw(st.integers(0, g.n - 1))
        row = sssp(g, s)
        assert row.dist == brute_distances(g.n, g.edges)[s]
        assert row.hops == brute_hops(g.n, g.edges, s)


class TestHopBounded:
    def test_path_beta_two(self):
        assert hop_bounded_sssp(unit_path(4), 0, 2).dist == [0, 1, 2, UNREACHABLE]

    def test_path_beta_three(self):
        assert hop_bounded_sssp(unit_path(4), 0, 3).dist == [0, 1, 2, 3]

    def test_bad_beta(self):
        with pytest.raises(GraphError):
            hop_bounded_sssp(unit_path(4), 0, 0)

    @given(small_graphs(), st.data())
    def test_slack_bound_equals_sssp(self, g, data):
        s = data.draw(st.integers(0, g.n - 1))
        assert hop_bounded_sssp(g, s, max(g.n - 1, 1)).dist == sssp(g, s).dist

    @given(small_graphs(), st.integers(1, 9), st.data())
    def test_matches_enumeration(self, g, beta, data):
        s = data.draw(st.integers(0, g.n - 1))
        assert hop_bounded_sssp(g, s, beta).dist == brute_distances(g.n, g.edges, beta)[s]

    @given(small_graphs(), st.integers(1, 9))
    def test_bulk_agrees_with_single_source(self, g, beta):
        bulk = hop_bounded_all_pairs(g, beta)
        for s in range(g.n):
            assert list(bulk[s]) == hop_bounded_sssp(g, s, beta).dist


class TestBulk:
    @given(small_graphs())
    def test_all_pairs_matches_sssp(self, g):
        d = all_pairs_distances(g)
        for s in range(g.n):
            assert list(d[s]) == sssp(g, s).dist

    def test_sources_subset(self):
        g = gnp(30, 0.2, seed=4, weighted=True)
        d = all_pairs_distances(g, [3, 7])
        assert d.shape == (2, 30)
        assert list(d[1]) == sssp(g, 7).dist


class TestAspectRatio:
    def test_triangle(self):
        assert aspect_ratio(TRIANGLE) == 3

    def test_unit_path(self):
        assert aspect_ratio(unit_path(5)) == 4

    def test_gnp_matches_all_pairs(self):
        g = gnp(12, 0.4, seed=7)
        rows = [sssp(g, s).dist for s in range(g.n)]
        finite = [x for r in rows for x in r if 0 < x < math.inf]
        assert aspect_ratio(g) == max(finite) / min(finite)

    def test_undefined(self):
        with pytest.raises(GraphError):
            aspect_ratio(Graph(1))
        with pytest.raises(GraphError):
            aspect_ratio(Graph(3))


class TestOverlay:
    def test_shortcut_one_hop(self):
        o = overlay(unit_path(3), [(0, 2, 2)])
        assert hop_bounded_sssp(o, 0, 1).dist[2] == 2

    def test_empty_extra_is_identity(self):
        g = gnp(20, 0.3, seed=2, weighted=True)
        o = overlay(g, [])
        for s in range(g.n):
            assert sssp(o, s).dist == sssp(g, s).dist

    @pytest.mark.parametrize("beta", [1, 2, 3, 5, 8])
    def test_long_shortcut(self, beta):
        o = overlay(unit_path(6), [(0, 5, 5)])
        assert hop_bounded_sssp(o, 0, beta).dist[5] == 5

    def test_parallel_edges_keep_lighter(self):
        g = Graph(2, [(0, 1, 4)], weighted=True)
        o = overlay(g, [(0, 1, 3)])
        assert sssp(o, 0).dist[1] == 3
        assert np.array_equal(hop_bounded_all_pairs(o, 1), np.array([[0, 3], [3, 0]]))
