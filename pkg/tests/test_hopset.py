import math

import pytest
from hypothesis import given, settings, strategies as st

from hopspan.edgeset import format_edge_set
from hopspan.generators import geometric, gnp, grid, path
from hopspan.graph import Graph, all_pairs_distances, hop_bounded_all_pairs, overlay
from hopspan.hopset import build_hopset, hopset_bound, single_scale_hopset
from hopspan.verify import verify_hopset
from oracles import brute_hopset_violations
from strategies import small_graphs


def test_bound_values():
    eps_eff, beta = hopset_bound(0.1, 3)
    assert eps_eff == pytest.approx(3.2) and beta == 160
    for eps in (0.01, 0.1):
        assert hopset_bound(eps, 1)[1] == 8


def test_two_vertices_duplicate_dropped():
    g = Graph(2, [(0, 1, 4)], weighted=True)
    res = single_scale_hopset(g, 2, 0.1, 1)
    assert len(res.edges) == 0 and res.dropped == 1


def test_two_vertices_longer_path_is_kept():
    g = Graph(3, [(0, 1, 2), (1, 2, 2)], weighted=True)
    res = single_scale_hopset(g, 2, 0.1, 1)
    assert (0, 2, 4.0) in list(res.edges)


def unit_weighted_path(n):
    return Graph(n, [(i, i + 1, 1) for i in range(n - 1)], weighted=True)


def test_unit_path_weights_exact():
    g = unit_weighted_path(8)
    res = single_scale_hopset(g, 2, 0.1, 3)
    d = all_pairs_distances(g)
    assert all(w == d[u, v] for u, v, w in res.edges)


@pytest.mark.parametrize("j", range(5))
def test_edgeless_every_scale(j):
    assert len(single_scale_hopset(Graph(5, weighted=True), j, 0.1, 3).edges) == 0


def test_short_path_all_scales_skipped():
    g = unit_weighted_path(4)
    res = build_hopset(g, 0.1, 3)
    assert len(res.edges) == 0 and res.skipped == [0, 1, 2]
    assert verify_hopset(g, res.edges, *hopset_bound(0.1, 3)).passed


def test_geometric_64():
    g = geometric(64, seed=5)
    for skip in (True, False):
        res = build_hopset(g, 0.1, 3, skip_short=skip)
        assert verify_hopset(g, res.edges, *hopset_bound(0.1, 3)).passed


def test_unit_star_leaves_two_hops():
    g = Graph(9, [(0, i, 1) for i in range(1, 9)], weighted=True)
    d2 = hop_bounded_all_pairs(g, 2)
    assert (d2 == all_pairs_distances(g)).all()
    res = build_hopset(g, 0.1, 3)
    assert len(res.edges) == 0


def test_long_path_needs_the_hopset():
    g = path(256, seed=1, weighted=True)
    eps_eff, beta = hopset_bound(0.1, 3)
    assert not verify_hopset(g, [], eps_eff, beta).passed
    res = build_hopset(g, 0.1, 3)
    assert verify_hopset(g, res.edges, eps_eff, beta).passed


@pytest.mark.parametrize("g", [grid(144, weighted=True, seed=2), gnp(80, seed=3, weighted=True)], ids=["grid", "gnp"])
@pytest.mark.parametrize("kappa", [1, 3, 7])
def test_all_scales_weights_and_stretch(g, kappa):
    res = build_hopset(g, 0.1, kappa, skip_short=False)
    d = all_pairs_distances(g)
    for u, v, w in res.edges:
        assert w == d[u, v]
        assert not (g.has_edge(u, v) and g.weight(u, v) == w)
    rep = verify_hopset(g, res.edges, *hopset_bound(0.1, kappa))
    assert rep.passed
    assert {res.edges.provenance(u, v).role for u, v, _ in res.edges} <= {"supercluster", "interconnect"}


def test_scale_provenance_and_tight_hop_budget():
    g = path(128, seed=4, weighted=True)
    res = build_hopset(g, 0.1, 3, skip_short=False)
    scales = {res.edges.provenance(u, v).scale for u, v, _ in res.edges}
    assert scales <= set(range(int(math.ceil(math.log2(max(all_pairs_distances(g)[0])))) + 1))
    o = overlay(g, list(res.edges))
    db = hop_bounded_all_pairs(o, 160)
    assert (db >= all_pairs_distances(g) * (1 - 1e-9)).all()


def test_deterministic():
    g = geometric(128, seed=9)
    assert format_edge_set(build_hopset(g, 0.1, 3, False).edges, g.n) == format_edge_set(
        build_hopset(g, 0.1, 3, False).edges, g.n
    )


@settings(max_examples=40)
@given(small_graphs(max_n=9, weighted=True), st.sampled_from([1, 3]), st.integers(0, 4))
def test_single_scale_against_brute_force(g, kappa, j):
    res = single_scale_hopset(g, j, 0.1, kappa)
    triples = list(res.edges)
    # every inserted weight is an exact distance, so lower bounds can never fail
    found = brute_hopset_violations(g, triples, 0.0, 3)
    assert not [v for v in found if v[0] in ("weight", "lower")]
