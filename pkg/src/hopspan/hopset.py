"""Near-exact hopsets: superclustering and interconnection, one scale at a time.

Scale ``j`` handles pairs at distance in ``[2^j, 2^(j+1))``.  Clusters start as
singletons and the thresholds are the spanner's, rescaled by the distance
unit ``2^j ε^(ℓ-1)``.  Instead of paths, every merge or interconnection adds
one center-to-center edge weighted by the exact graph distance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from ._search import nearby_clusters
from .edgeset import EdgeSet, Provenance
from .graph import Graph, close_enough, max_distance, sssp
from .params import ScaleParams, beta_asymptotic, make_params, scale_params
from .partition import Cluster
from .spanner import Supercluster


@dataclass
class ScalePhase:
    index: int
    clusters: list
    uncovered: list = field(default_factory=list)
    superclusters: list = field(default_factory=list)
    star_edges: int = 0
    interconnect_edges: int = 0


@dataclass
class ScaleResult:
    params: ScaleParams
    edges: EdgeSet
    phases: list[ScalePhase]
    dropped: int = 0  # edges that duplicated a graph edge


@dataclass
class HopsetResult:
    graph: Graph
    eps: float
    kappa: int
    edges: EdgeSet
    scales: list[ScaleResult]
    skipped: list[int]

    def summary(self) -> dict:
        eps_eff, beta_hops = hopset_bound(self.eps, self.kappa)
        return {
            "construction": "hopset",
            "n": self.graph.n,
            "m": self.graph.m,
            "size": len(self.edges),
            "eps": self.eps,
            "kappa": self.kappa,
            "epsEff": eps_eff,
            "betaHops": beta_hops,
            "betaAsymptotic": _json_num(beta_asymptotic(self.eps, self.kappa)),
            "skippedScales": self.skipped,
            "scales": [
                {
                    "scale": s.params.j,
                    "size": len(s.edges),
                    "dropped": s.dropped,
                    "phases": [
                        {
                            "phase": ph.index,
                            "clusters": len(ph.clusters),
                            "uncovered": len(ph.uncovered),
                            "superclusters": len(ph.superclusters),
                            "starEdges": ph.star_edges,
                            "interconnectEdges": ph.interconnect_edges,
                        }
                        for ph in s.phases
                    ],
                }
                for s in self.scales
            ],
        }


def _json_num(x):
    return None if math.isinf(x) else x


def hopset_bound(eps: float, kappa: int) -> tuple[float, int]:
    """Verification envelope (ε_eff, β_hops) = (16ℓε, ceil(8ℓ(1/ε)^(ℓ-1)))."""
    ell = make_params(1, eps, kappa).ell
    return 16 * ell * eps, math.ceil(8 * ell * (1 / eps) ** (ell - 1) - 1e-9)


class _CenterDistances:
    """Memoised exact single-source rows from cluster centers."""

    def __init__(self, g):
        self.g = g
        self.rows: dict[int, list] = {}

    def __call__(self, u: int, v: int) -> float:
        row = self.rows.get(u)
        if row is None:
            row = self.rows[u] = sssp(self.g, u).dist
        return row[v]


def _insert(g, h, dist, a, b, prov) -> bool:
    """Add (a, b, d_G(a, b)) unless it merely repeats the graph edge (a, b)."""
    d = dist(a, b)
    if g.has_edge(a, b) and close_enough(g.weight(a, b), d):
        return False
    h.add(a, b, d, prov)
    return True


def single_scale_hopset(g: Graph, j: int, eps: float, kappa: int) -> ScaleResult:
    sp = scale_params(g.n, j, eps, kappa)
    base = sp.base
    ell = base.ell
    h = EdgeSet()
    dist = _CenterDistances(g)
    dropped = 0
    phases = []
    current = [Cluster(v, (v,)) for v in range(g.n)]
    for i in range(ell):
        clusters = sorted(current, key=lambda c: c.center)
        state = ScalePhase(i, clusters)
        owner = [-1] * g.n
        for idx, c in enumerate(clusters):
            for v in c.members:
                owner[v] = idx
        limit = sp.delta[i]
        covered = [False] * len(clusters)
        if i < ell - 1:
            for idx in range(len(clusters)):
                if covered[idx]:
                    continue
                near, _ = nearby_clusters(
                    g, clusters[idx].members, limit, owner, lambda c: c != idx and not covered[c]
                )
                if not base.degree_met(len(near), i):
                    continue
                covered[idx] = True
                r = clusters[idx].center
                parts, members = [r], list(clusters[idx].members)
                for k in sorted(near):
                    covered[k] = True
                    rk = clusters[k].center
                    if _insert(g, h, dist, r, rk, Provenance("supercluster", i, j)):
                        state.star_edges += 1
                    else:
                        dropped += 1
                    parts.append(rk)
                    members.extend(clusters[k].members)
                state.superclusters.append(Supercluster(r, tuple(sorted(members)), tuple(parts)))
        state.uncovered = [c for k, c in enumerate(clusters) if not covered[k]]
        live = {k for k in range(len(clusters)) if not covered[k]}
        for idx in sorted(live):
            near, _ = nearby_clusters(
                g, clusters[idx].members, limit, owner, lambda c: c > idx and c in live
            )
            for k in sorted(near):
                prov = Provenance("interconnect", i, j)
                if _insert(g, h, dist, clusters[idx].center, clusters[k].center, prov):
                    state.interconnect_edges += 1
                else:
                    dropped += 1
        phases.append(state)
        current = state.superclusters
    return ScaleResult(sp, h, phases, dropped)


def build_hopset(g: Graph, eps: float, kappa: int, skip_short: bool = True) -> HopsetResult:
    """Union of single-scale hopsets over j = 0..ceil(log2 max distance).

    Scales with 2^(j+1) <= β_hops are skipped when ``skip_short``: with
    weights >= 1 such pairs already have an exact path of fewer hops in G.
    """
    _, beta_hops = hopset_bound(eps, kappa)
    top = max_distance(g)
    union = EdgeSet()
    scales, skipped = [], []
    if top > 0:
        for j in range(int(math.ceil(math.log2(top))) + 1):
            if skip_short and 2 ** (j + 1) <= beta_hops:
                skipped.append(j)
                continue
            res = single_scale_hopset(g, j, eps, kappa)
            scales.append(res)
            union = union.union(res.edges)
    return HopsetResult(g, eps, kappa, union, scales, skipped)
