"""Ground partition of an unweighted graph by greedy region growing.

Balls are grown breadth-first over the still-unclustered vertices from the
lowest-id unclustered vertex.  A ball of radius ``i`` is extended while the
next layer multiplies its size by more than ``n^(1/κ)``; the first time it
does not, the radius-``i`` ball becomes a cluster.  Every cluster of radius
``i`` therefore has more than ``n^(i/κ)`` vertices (at least one for
``i = 0``), which caps the radius at ``κ - 1``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, GraphError
from .params import phase_count, power_at_least


@dataclass(frozen=True)
class Cluster:
    center: int
    members: tuple[int, ...]
    radius: int = 0

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class GroundPartition:
    n: int
    kappa: int
    clusters: tuple[Cluster, ...]
    cluster_of: tuple[int, ...]
    # (cluster index a < b) -> representative graph edge (u in a, v in b)
    superedges: dict = field(default_factory=dict)

    def level(self, idx: int) -> int:
        return self.clusters[idx].radius

    def levels(self) -> dict[int, list[Cluster]]:
        out: dict[int, list[Cluster]] = {}
        for c in self.clusters:
            out.setdefault(c.radius, []).append(c)
        return out

    def dump(self) -> str:
        return "".join(
            f"{c.center} {c.radius} {' '.join(map(str, c.members))}\n" for c in self.clusters
        )


def build_ground_partition(g: Graph, kappa: int) -> GroundPartition:
    if g.weighted:
        raise GraphError("ground partitions are defined for unweighted graphs")
    if kappa < 1:
        raise GraphError("kappa must be at least 1")
    n = g.n
    adj = g.adjacency
    clustered = [False] * n
    cluster_of = [-1] * n
    clusters: list[Cluster] = []
    for r in range(n):
        if clustered[r]:
            continue
        ball = [r]
        inside = {r}
        layer = [r]
        radius = 0
        while True:
            nxt = []
            for u in layer:
                for v, _ in adj[u]:
                    if not clustered[v] and v not in inside:
                        inside.add(v)
                        nxt.append(v)
            # radius is capped at κ-1; only a ball that already holds all of V could pass it
            if not nxt or radius == kappa - 1 or not _grows(len(ball) + len(nxt), len(ball), n, kappa):
                break
            ball.extend(nxt)
            layer = nxt
            radius += 1
        members = tuple(sorted(ball))
        for v in members:
            clustered[v] = True
            cluster_of[v] = len(clusters)
        clusters.append(Cluster(r, members, radius))
    superedges: dict[tuple[int, int], tuple[int, int]] = {}
    for u, v, _ in g.edges:
        a, b = cluster_of[u], cluster_of[v]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        if key not in superedges:
            superedges[key] = (u, v) if a < b else (v, u)
    return GroundPartition(n, kappa, tuple(clusters), tuple(cluster_of), superedges)


def _grows(new_size: int, old_size: int, n: int, kappa: int) -> bool:
    # new_size >= n^(1/κ) * old_size  <=>  new_size^κ >= n * old_size^κ
    return new_size ** kappa >= n * old_size ** kappa


def bfs_tree(g: Graph, cluster: Cluster) -> list[tuple[int, int]]:
    """Edges of a BFS tree of G[cluster] rooted at the cluster center."""
    members = set(cluster.members)
    seen = {cluster.center}
    queue = deque([cluster.center])
    tree = []
    while queue:
        u = queue.popleft()
        for v, _ in g.adjacency[u]:
            if v in members and v not in seen:
                seen.add(v)
                tree.append((u, v))
                queue.append(v)
    return tree


def induced_radius(g: Graph, cluster: Cluster) -> int:
    """Eccentricity of the center inside G[cluster]; -1 if G[cluster] is disconnected."""
    members = set(cluster.members)
    dist = {cluster.center: 0}
    queue = deque([cluster.center])
    while queue:
        u = queue.popleft()
        for v, _ in g.adjacency[u]:
            if v in members and v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    if len(dist) != len(members):
        return -1
    return max(dist.values())


def bucket_index(radius: int) -> int:
    """Radius class i goes to bucket floor(log2(i+1))."""
    return (radius + 1).bit_length() - 1


def bucketize(p: GroundPartition, kappa: int | None = None) -> list[list[Cluster]]:
    """Q̂_0..Q̂_{ℓ-1} with Q̂_b holding radii 2^b - 1 .. 2^(b+1) - 2."""
    kappa = p.kappa if kappa is None else kappa
    ell = phase_count(kappa)
    buckets: list[list[Cluster]] = [[] for _ in range(ell)]
    for c in p.clusters:
        b = bucket_index(c.radius)
        if b >= ell:
            raise GraphError(f"cluster radius {c.radius} exceeds what kappa={kappa} allows")
        buckets[b].append(c)
    return buckets


def outgoing_counts(g: Graph, p: GroundPartition) -> list[tuple[int, int]]:
    """Per cluster: (distinct neighbor vertices outside, distinct neighbor clusters).

    Both readings of the outgoing-neighbor bound, for reporting.
    """
    out = []
    for idx, c in enumerate(p.clusters):
        verts, clus = set(), set()
        for u in c.members:
            for v, _ in g.adjacency[u]:
                if p.cluster_of[v] != idx:
                    verts.add(v)
                    clus.add(p.cluster_of[v])
        out.append((len(verts), len(clus)))
    return out


def validate_partition(g: Graph, p: GroundPartition) -> list[str]:
    """Return a list of violated ground-partition invariants (empty when valid)."""
    problems = []
    n, kappa = g.n, p.kappa
    seen = [0] * n
    for idx, c in enumerate(p.clusters):
        for v in c.members:
            seen[v] += 1
            if p.cluster_of[v] != idx:
                problems.append(f"vertex {v} mislabelled")
        if c.center not in c.members:
            problems.append(f"cluster {idx} does not contain its center")
        rad = induced_radius(g, c)
        if rad != c.radius:
            problems.append(f"cluster {idx}: recorded radius {c.radius}, induced radius {rad}")
        if c.radius > kappa - 1:
            problems.append(f"cluster {idx}: radius {c.radius} > kappa-1")
        if not power_at_least(len(c), n, c.radius, kappa):
            problems.append(f"cluster {idx}: size {len(c)} < n^({c.radius}/kappa)")
    if any(s != 1 for s in seen):
        problems.append("clusters do not partition V")
    for u, v, _ in g.edges:
        a, b = p.cluster_of[u], p.cluster_of[v]
        if a != b and (min(a, b), max(a, b)) not in p.superedges:
            problems.append(f"edge ({u}, {v}) crosses clusters without a superedge")
    for (a, b), (u, v) in p.superedges.items():
        if not g.has_edge(u, v) or p.cluster_of[u] != a or p.cluster_of[v] != b:
            problems.append(f"superedge ({a}, {b}) has a bad representative ({u}, {v})")
    for idx, c in enumerate(p.clusters):
        if c.radius == kappa - 1:
            continue  # growth may have stopped at the radius cap rather than failing
        later = {v for u in c.members for v, _ in g.adjacency[u] if p.cluster_of[v] > idx}
        # the failed growth step: |C| + |later| < n^(1/κ) |C|
        if later and (len(c) + len(later)) ** kappa >= n * len(c) ** kappa:
            problems.append(f"cluster {idx}: {len(later)} later neighbors, growth should have continued")
    if len(p.superedges) > 4 * n ** (1 + 1 / kappa):
        problems.append(f"{len(p.superedges)} superedges exceed 4 n^(1+1/kappa)")
    return problems
