"""Near-additive spanners by superclustering and interconnection.

Starting from a ground partition, each phase ``i`` merges clusters that see
at least ``deg_i`` uncovered clusters within distance ``δ_i`` into
superclusters (shortest paths from the center cluster to every absorbed one go
into H), then connects every pair of the remaining uncovered clusters within
``δ_i`` by a shortest path.  The last phase only interconnects.
"""
from __future__ import annotations

import math

from dataclasses import dataclass, field

from ._search import nearby_clusters, trace_path
from .edgeset import EdgeSet, Provenance
from .graph import Graph, GraphError
from .params import ConstructionParams, beta_asymptotic, make_params
from .partition import GroundPartition, bfs_tree, bucketize, build_ground_partition


@dataclass(frozen=True)
class Supercluster:
    center: int
    members: tuple[int, ...]
    parts: tuple[int, ...]  # centers of the merged clusters, center cluster first

    def __len__(self):
        return len(self.members)


@dataclass
class PhaseState:
    index: int
    clusters: list  # P_i
    uncovered: list = field(default_factory=list)  # U_i
    superclusters: list = field(default_factory=list)  # P̂_i
    star_paths: list = field(default_factory=list)  # (center, absorbed center, path)
    interconnect_paths: list = field(default_factory=list)  # (center, center, path)


@dataclass
class SpannerResult:
    graph: Graph
    params: ConstructionParams
    partition: GroundPartition
    buckets: list
    phases: list[PhaseState]
    edges: EdgeSet

    def subgraph(self) -> Graph:
        return self.edges.as_graph(self.graph.n, weighted=False)

    def radius_bounds(self) -> list[float]:
        """Supercluster radius bounds per phase: entry i bounds clusters of P̂_i.

        Follows R_{i+1} = 3 R_i + δ_i, but with R_i raised to the largest
        ground-cluster radius entering phase i; it coincides with the plain
        schedule whenever those ground radii do not exceed it.
        """
        out = []
        r = 0.0
        for i in range(self.params.ell - 1):
            ground = max((c.radius for c in self.buckets[i]), default=0)
            r = 3 * max(r, ground) + self.params.delta[i]
            out.append(r)
        return out

    def summary(self) -> dict:
        eps_eff, beta_eff = spanner_bound(self.params.eps, self.params.kappa)
        return {
            "construction": "spanner",
            "n": self.graph.n,
            "m": self.graph.m,
            "size": len(self.edges),
            "eps": self.params.eps,
            "kappa": self.params.kappa,
            "ell": self.params.ell,
            "phases": [
                {
                    "phase": ph.index,
                    "clusters": len(ph.clusters),
                    "uncovered": len(ph.uncovered),
                    "superclusters": len(ph.superclusters),
                    "starPaths": len(ph.star_paths),
                    "interconnectPaths": len(ph.interconnect_paths),
                }
                for ph in self.phases
            ],
            "roles": self.edges.phase_counts(),
            "epsEff": eps_eff,
            "betaEff": beta_eff,
            "betaAsymptotic": _json_num(beta_asymptotic(self.params.eps, self.params.kappa)),
        }


def _json_num(x):
    return None if math.isinf(x) else x


def spanner_bound(eps: float, kappa: int) -> tuple[float, float]:
    """Verification envelope (ε_eff, β_eff) = (16ℓε, 16ℓ((1/ε)^(ℓ-2) + κ))."""
    p = make_params(1, eps, kappa)
    ell = p.ell
    return 16 * ell * eps, 16 * ell * ((1 / eps) ** (ell - 2) + kappa)


def _add_path(h: EdgeSet, path, prov: Provenance):
    for a, b in zip(path, path[1:]):
        h.add(a, b, 1, prov)


def _owner_map(n, clusters):
    owner = [-1] * n
    for idx, c in enumerate(clusters):
        for v in c.members:
            owner[v] = idx
    return owner


def _supercluster_step(g, clusters, i, params, h):
    """Greedy superclustering of P_i; returns (U_i, P̂_i, star paths)."""
    limit = params.depth(i)
    owner = _owner_map(g.n, clusters)
    covered = [False] * len(clusters)
    hats, stars = [], []
    for idx in sorted(range(len(clusters)), key=lambda k: clusters[k].center):
        if covered[idx]:
            continue
        near, parent = nearby_clusters(
            g, clusters[idx].members, limit, owner, lambda c: c != idx and not covered[c]
        )
        if not params.degree_met(len(near), i):
            continue
        covered[idx] = True
        center = clusters[idx]
        parts = [center.center]
        members = list(center.members)
        for j in sorted(near, key=lambda c: clusters[c].center):
            path = trace_path(parent, near[j][1])
            _add_path(h, path, Provenance("supercluster", i))
            stars.append((center.center, clusters[j].center, tuple(path)))
            covered[j] = True
            parts.append(clusters[j].center)
            members.extend(clusters[j].members)
        hats.append(Supercluster(center.center, tuple(sorted(members)), tuple(parts)))
    uncovered = [c for k, c in enumerate(clusters) if not covered[k]]
    return uncovered, hats, stars


def _interconnect_step(g, clusters, i, params, h):
    limit = params.depth(i)
    ordered = sorted(clusters, key=lambda c: c.center)
    owner = _owner_map(g.n, ordered)
    paths = []
    for idx, c in enumerate(ordered[:-1]):
        near, parent = nearby_clusters(g, c.members, limit, owner, lambda k: k > idx)
        for j in sorted(near):
            path = trace_path(parent, near[j][1])
            _add_path(h, path, Provenance("interconnect", i))
            paths.append((c.center, ordered[j].center, tuple(path)))
    return paths


def build_spanner(g: Graph, eps: float, kappa: int) -> SpannerResult:
    """(1+ε', β')-spanner H ⊆ E of an unweighted graph, with its phase trace."""
    if g.weighted:
        raise GraphError("spanners are built for unweighted graphs")
    params = make_params(g.n, eps, kappa)
    partition = build_ground_partition(g, kappa)
    buckets = bucketize(partition, kappa)
    h = EdgeSet()
    for c in partition.clusters:
        for u, v in bfs_tree(g, c):
            h.add(u, v, 1, Provenance("init-tree"))
    for u, v in partition.superedges.values():
        h.add(u, v, 1, Provenance("init-superedge"))

    phases = []
    current = list(buckets[0])
    for i in range(params.ell):
        state = PhaseState(i, sorted(current, key=lambda c: c.center))
        if i < params.ell - 1:
            state.uncovered, state.superclusters, state.star_paths = _supercluster_step(
                g, state.clusters, i, params, h
            )
        else:
            state.uncovered = list(state.clusters)
        state.interconnect_paths = _interconnect_step(g, state.uncovered, i, params, h)
        phases.append(state)
        if i < params.ell - 1:
            current = list(state.superclusters) + list(buckets[i + 1])
    return SpannerResult(g, params, partition, buckets, phases, h)
