"""Truncated multi-source searches from a cluster, shared by the constructions."""
from __future__ import annotations

import heapq
from collections import deque
from typing import Callable, Sequence

from .graph import REL_TOL


def cluster_search(g, sources: Sequence[int], limit: float):
    """Distances from the vertex set ``sources`` up to ``limit``.

    Returns ``(dist, parent)`` dicts over the reached vertices; ``parent`` of a
    source is ``None``.  Ties resolve towards smaller vertex ids because the
    sources and adjacency lists are scanned in ascending order.
    """
    dist: dict[int, float] = {}
    parent: dict[int, int | None] = {}
    adj = g.adjacency
    if not g.weighted:
        depth = int(limit + 1e-9)
        queue = deque()
        for s in sorted(sources):
            dist[s] = 0
            parent[s] = None
            queue.append(s)
        while queue:
            u = queue.popleft()
            du = dist[u]
            if du >= depth:
                continue
            for v, _ in adj[u]:
                if v not in dist:
                    dist[v] = du + 1
                    parent[v] = u
                    queue.append(v)
        return dist, parent
    cap = limit + REL_TOL * max(1.0, limit)
    best: dict[int, float] = {}
    heap = []
    for s in sorted(sources):
        best[s] = 0.0
        parent[s] = None
        heap.append((0.0, s))
    heapq.heapify(heap)
    while heap:
        d, u = heapq.heappop(heap)
        if u in dist:
            continue
        dist[u] = d
        for v, w in adj[u]:
            nd = d + w
            if nd <= cap and v not in dist and nd < best.get(v, float("inf")):
                best[v] = nd
                parent[v] = u
                heapq.heappush(heap, (nd, v))
    return dist, parent


def nearby_clusters(
    g, sources: Sequence[int], limit: float, owner: Sequence[int], eligible: Callable[[int], bool]
) -> tuple[dict[int, tuple[float, int]], dict]:
    """Clusters within ``limit`` of ``sources``: cluster id -> (distance, closest vertex).

    ``owner[v]`` is the cluster id of ``v`` (or -1) and ``eligible`` filters ids.
    """
    dist, parent = cluster_search(g, sources, limit)
    found: dict[int, tuple[float, int]] = {}
    for v, d in dist.items():
        c = owner[v]
        if c < 0 or not eligible(c):
            continue
        cur = found.get(c)
        if cur is None or (d, v) < cur:
            found[c] = (d, v)
    return found, parent


def trace_path(parent: dict, v: int) -> list[int]:
    """Vertex path from a search source to ``v``."""
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    return path
