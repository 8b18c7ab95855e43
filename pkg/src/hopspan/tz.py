"""Scale-free emulator/hopset from a sampled vertex hierarchy.

``A_0 = V`` and ``A_{i+1}`` keeps each vertex of ``A_i`` with probability
``n^(-2^i/κ)``.  A vertex ``u`` whose top level is ``i`` connects to every
``A_i`` vertex strictly closer than ``A_{i+1}`` (its bunch), and every vertex
connects to all of its pivots.  Edges carry exact graph distances, and no
stretch parameter enters the construction.
"""
from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass

from .edgeset import EdgeSet, Provenance
from .graph import UNREACHABLE, Graph, sssp
from .params import EPS_LIMIT, ParameterError, phase_count


@dataclass(frozen=True)
class Hierarchy:
    n: int
    kappa: int
    levels: tuple[frozenset, ...]  # A_0 .. A_{ℓ-1}; A_ℓ is empty
    probabilities: tuple[float, ...]  # q_0 .. q_{ℓ-2}
    seed: int | None = None

    @property
    def ell(self) -> int:
        return len(self.levels)

    def level_of(self, v: int) -> int:
        top = 0
        for i, a in enumerate(self.levels):
            if v in a:
                top = i
        return top

    def expected_sizes(self) -> list[float]:
        """N_i = n^(1 - (2^i - 1)/κ)."""
        return [self.n ** (1 - (2 ** i - 1) / self.kappa) for i in range(self.ell)]

    def dump(self) -> str:
        return "".join(
            f"{i} {' '.join(map(str, sorted(a)))}\n".replace(" \n", "\n")
            for i, a in enumerate(self.levels)
        )


@dataclass
class PivotTable:
    pivot: list[list]  # pivot[i][v] -> vertex or None
    dist: list[list]  # dist[i][v]


@dataclass
class BunchTable:
    level: list[int]  # top level of each vertex
    members: list[dict]  # B(u) -> d_G(u, v); includes u itself
    threshold: list[float]  # d(u, A_{i+1}) used for the strict inequality


@dataclass
class TZResult:
    graph: Graph
    hierarchy: Hierarchy
    pivots: PivotTable
    bunches: BunchTable
    edges: EdgeSet

    def summary(self) -> dict:
        return {
            "construction": "tz",
            "n": self.graph.n,
            "m": self.graph.m,
            "size": len(self.edges),
            "kappa": self.hierarchy.kappa,
            "seed": self.hierarchy.seed,
            "levels": [len(a) for a in self.hierarchy.levels],
            "roles": self.edges.phase_counts(),
        }


def sample_hierarchy(g: Graph, kappa: int, seed: int | None = None) -> Hierarchy:
    n = g.n
    ell = phase_count(kappa)
    rng = random.Random(seed)
    probs = tuple(n ** (-(2 ** i) / kappa) for i in range(ell - 1))
    levels = [frozenset(range(n))]
    for q in probs:
        prev = sorted(levels[-1])
        levels.append(frozenset(v for v in prev if rng.random() < q))
    return Hierarchy(n, kappa, tuple(levels), probs, seed)


def _multi_source(g: Graph, sources):
    """Nearest source for every vertex; ties go to the smaller source id."""
    n = g.n
    near = [None] * n
    dist = [UNREACHABLE] * n
    heap = [(0, s, s) for s in sorted(sources)]
    heapq.heapify(heap)
    while heap:
        d, s, u = heapq.heappop(heap)
        if near[u] is not None:
            continue
        near[u] = s
        dist[u] = d
        for v, w in g.adjacency[u]:
            if near[v] is None:
                heapq.heappush(heap, (d + w, s, v))
    return near, dist


def _truncated_ball(g: Graph, u: int, stop: frozenset):
    """Dijkstra from u until the first vertex of ``stop`` settles.

    Returns (settled distances, distance to ``stop`` or inf).
    """
    settled: dict[int, float] = {}
    heap = [(0, u)]
    best = {u: 0}
    while heap:
        d, x = heapq.heappop(heap)
        if x in settled:
            continue
        settled[x] = d
        if x in stop:
            return settled, d
        for y, w in g.adjacency[x]:
            nd = d + w
            if y not in settled and nd < best.get(y, UNREACHABLE):
                best[y] = nd
                heapq.heappush(heap, (nd, y))
    return settled, UNREACHABLE


def compute_pivots_bunches(g: Graph, h: Hierarchy) -> tuple[PivotTable, BunchTable]:
    n, ell = g.n, h.ell
    piv, pdist = [], []
    for a in h.levels:
        near, dist = _multi_source(g, a)
        piv.append(near)
        pdist.append(dist)
    levels, members, thresholds = [], [], []
    top = sorted(h.levels[-1])
    for u in range(n):
        i = h.level_of(u)
        levels.append(i)
        if i == ell - 1:
            row = sssp(g, u).dist
            members.append({v: row[v] for v in top if row[v] < UNREACHABLE})
            thresholds.append(UNREACHABLE)
            continue
        settled, t = _truncated_ball(g, u, h.levels[i + 1])
        a_i = h.levels[i]
        b = {v: d for v, d in sorted(settled.items()) if v in a_i and d < t}
        p = piv[i + 1][u]
        if p is not None:
            b[p] = pdist[i + 1][u]
        members.append(b)
        thresholds.append(t)
    return PivotTable(piv, pdist), BunchTable(levels, members, thresholds)


def build_tz(g: Graph, kappa: int, seed: int | None = None, hierarchy: Hierarchy | None = None) -> TZResult:
    h = hierarchy if hierarchy is not None else sample_hierarchy(g, kappa, seed)
    pivots, bunches = compute_pivots_bunches(g, h)
    ell = h.ell
    edges = EdgeSet()
    for u in range(g.n):
        i = bunches.level[u]
        pivot = pivots.pivot[i + 1][u] if i < ell - 1 else None
        for v, dv in bunches.members[u].items():
            # the level-(i+1) pivot is tagged by the pivot pass below
            if v != pivot:
                edges.add(u, v, dv, Provenance("bunch", i))
    for u in range(g.n):
        for j in range(1, ell):
            p = pivots.pivot[j][u]
            if p is not None and p != u:
                edges.add(u, p, pivots.dist[j][u], Provenance("pivot", j))
    return TZResult(g, h, pivots, bunches, edges)


def tz_bounds(eps: float, kappa: int) -> tuple[float, float, int]:
    """(ε_eff, β_add) for the emulator check and β_hops for the hopset check.

    Emulator: ε_eff = 8ℓε and β_add = 16ℓ(1/ε)^(ℓ-1).  Hopset: stretch
    1 + 16ℓε within β_hops = 2·ceil((1/ε)^(ℓ-1)) hops.
    """
    if not eps > 0 or eps > EPS_LIMIT:
        raise ParameterError(f"eps must lie in (0, 1/6], got {eps}")
    ell = phase_count(kappa)
    return 8 * ell * eps, 16 * ell * (1 / eps) ** (ell - 1), 2 * math.ceil((1 / eps) ** (ell - 1) - 1e-9)


def tz_hopset_stretch(eps: float, kappa: int) -> float:
    return 16 * phase_count(kappa) * eps
