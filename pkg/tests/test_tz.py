import math

import pytest
from hypothesis import given, settings, strategies as st

from hopspan.generators import geometric, gnp, path
from hopspan.graph import Graph, all_pairs_distances
from hopspan.params import ParameterError
from hopspan.tz import Hierarchy, build_tz, compute_pivots_bunches, sample_hierarchy, tz_bounds
from hopspan.verify import verify_bunches, verify_emulator, verify_hopset
from strategies import small_graphs


def fixed_hierarchy(n, kappa, levels):
    return Hierarchy(n, kappa, tuple(frozenset(a) for a in levels), ())


UNIT5 = path(5)
H5 = fixed_hierarchy(5, 3, [range(5), {4}])


def test_bounds_values():
    eps_eff, beta_add, beta_hops = tz_bounds(0.1, 3)
    assert eps_eff == pytest.approx(1.6)
    assert beta_add == pytest.approx(320)
    assert beta_hops == 20
    assert tz_bounds(0.1, 1)[2] == 2


@pytest.mark.parametrize("eps", [0.0, 0.2, 1.0])
def test_bounds_reject(eps):
    with pytest.raises(ParameterError):
        tz_bounds(eps, 3)


def test_bounds_accept_one_sixth():
    assert tz_bounds(1 / 6, 7)[0] == pytest.approx(4.0)


def test_hierarchy_expected_sizes():
    h = sample_hierarchy(Graph(128), 7, seed=0)
    assert h.ell == 3
    assert h.expected_sizes() == pytest.approx([128, 64, 16])
    assert h.probabilities == pytest.approx((0.5, 0.25))


def test_hierarchy_kappa_one():
    h = sample_hierarchy(UNIT5, 1, seed=3)
    assert h.levels == (frozenset(range(5)),)


def test_hierarchy_deterministic_and_nested():
    g = gnp(200, seed=1)
    a, b = sample_hierarchy(g, 7, 11), sample_hierarchy(g, 7, 11)
    assert a == b
    for hi, lo in zip(a.levels[1:], a.levels):
        assert hi <= lo
    assert sample_hierarchy(g, 7, 12) != a


def test_path_bunch_of_zero():
    piv, bun = compute_pivots_bunches(UNIT5, H5)
    assert set(bun.members[0]) == {0, 1, 2, 3, 4}
    assert bun.members[0][4] == 4
    assert bun.threshold[0] == 4


def test_pivot_of_sampled_vertex_is_itself():
    piv, _ = compute_pivots_bunches(UNIT5, H5)
    assert piv.pivot[1][4] == 4 and piv.dist[1][4] == 0
    assert all(piv.pivot[0][v] == v for v in range(5))


def test_top_level_bunch_is_whole_top_level():
    g = gnp(60, seed=2)
    h = sample_hierarchy(g, 3, 5)
    _, bun = compute_pivots_bunches(g, h)
    top = h.levels[-1]
    d = all_pairs_distances(g)
    for u in top:
        assert set(bun.members[u]) == {v for v in top if math.isfinite(d[u, v])}


def test_single_edge_kappa_one():
    g = Graph(2, [(0, 1)])
    res = build_tz(g, 1, seed=0)
    assert list(res.edges) == [(0, 1, 1)]


def test_path_has_pivot_edge():
    res = build_tz(UNIT5, 3, hierarchy=H5)
    assert (0, 4, 4) in list(res.edges)
    assert res.edges.provenance(0, 4).role == "pivot"


def test_gnp_bunches_and_weights():
    g = gnp(64, 0.2, seed=9)
    res = build_tz(g, 3, seed=9)
    assert verify_bunches(g, res.hierarchy, res.pivots, res.bunches).passed
    d = all_pairs_distances(g)
    assert all(w == d[u, v] for u, v, w in res.edges)


def test_removed_member_is_reported():
    g = geometric(64, seed=9)
    res = build_tz(g, 3, seed=9)
    ell = res.hierarchy.ell
    for u in range(g.n):
        i = res.bunches.level[u]
        p = res.pivots.pivot[i + 1][u] if i < ell - 1 else None
        others = [v for v in sorted(res.bunches.members[u]) if v not in (u, p)]
        if others:
            break
    victim = others[0]
    del res.bunches.members[u][victim]
    rep = verify_bunches(g, res.hierarchy, res.pivots, res.bunches)
    assert ("bunch-missing", u, victim, i) in rep.counterexamples


def test_removed_pivot_is_reported():
    g = gnp(64, 0.2, seed=9)
    res = build_tz(g, 3, seed=9)
    u = next(u for u in range(g.n) if res.bunches.level[u] == 0 and res.pivots.pivot[1][u] != u)
    p = res.pivots.pivot[1][u]
    del res.bunches.members[u][p]
    rep = verify_bunches(g, res.hierarchy, res.pivots, res.bunches)
    assert ("bunch-pivot-missing", u, p, 0) in rep.counterexamples


def test_pivot_always_in_bunch():
    g = geometric(100, seed=4)
    res = build_tz(g, 7, seed=4)
    for u in range(g.n):
        i = res.bunches.level[u]
        if i < res.hierarchy.ell - 1 and res.pivots.pivot[i + 1][u] is not None:
            assert res.pivots.pivot[i + 1][u] in res.bunches.members[u]


def test_one_build_serves_every_eps():
    g = gnp(100, seed=3)
    res = build_tz(g, 3, seed=3)
    for t in range(4):
        eps = (1 / 6) * 2 ** -t
        eps_eff, beta_add, _ = tz_bounds(eps, 3)
        assert verify_emulator(g, res.edges, eps_eff, beta_add).passed


def test_weighted_hopset_role():
    g = geometric(128, seed=6)
    res = build_tz(g, 3, seed=6)
    _, _, beta_hops = tz_bounds(0.1, 3)
    assert verify_hopset(g, res.edges, 16 * 2 * 0.1, beta_hops).passed


@settings(max_examples=60)
@given(small_graphs(max_n=25, max_density=0.3, float_weights=True), st.sampled_from([1, 2, 3, 7]), st.integers(0, 50))
def test_bunches_match_definition(g, kappa, seed):
    res = build_tz(g, kappa, seed=seed)
    rep = verify_bunches(g, res.hierarchy, res.pivots, res.bunches)
    assert rep.passed, rep.counterexamples
