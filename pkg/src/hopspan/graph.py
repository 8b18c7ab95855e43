"""Undirected graphs and the distance oracles everything else is measured with.

Two oracles are provided: exact single-source distances (breadth-first search
on unit graphs, Dijkstra otherwise) and hop-bounded distances, i.e. the
shortest path that uses at most ``beta`` edges.  Bulk all-pairs variants return
dense numpy matrices and are what the verifiers use.
"""
from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

UNREACHABLE = math.inf
REL_TOL = 1e-9

Edge = tuple[int, int, float]


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _canonical_edges(n: int, edges: Iterable[Sequence], weighted: bool) -> tuple[Edge, ...]:
    seen = set()
    out = []
    for e in edges:
        if len(e) == 2:
            u, v, w = e[0], e[1], 1
        else:
            u, v, w = e[0], e[1], e[2]
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex id outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
        if weighted:
            w = float(w)
            if not w >= 1:
                raise GraphError(f"edge {key} has weight {w} < 1")
        elif w != 1:
            raise GraphError(f"unweighted graph has edge {key} with weight {w}")
        else:
            w = 1
        out.append((key[0], key[1], w))
    out.sort()
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph on vertices ``0..n-1``.

    Weighted graphs require every weight to be at least 1; unweighted graphs
    store weight 1 on every edge.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    weighted: bool = False
    adjacency: tuple[tuple[tuple[int, float], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        edges = _canonical_edges(self.n, self.edges, self.weighted)
        object.__setattr__(self, "edges", edges)
        adj: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
        for u, v, w in edges:
            adj[u].append((v, w))
            adj[v].append((u, w))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_weights", {(u, v): w for u, v, w in edges})

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._weights

    def weight(self, u: int, v: int) -> float:
        return self._weights[(min(u, v), max(u, v))]

    def neighbors(self, u: int) -> tuple[tuple[int, float], ...]:
        return self.adjacency[u]

    def subgraph(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Spanning subgraph on the given vertex pairs, keeping G's weights."""
        return Graph(self.n, [(u, v, self.weight(u, v)) for u, v in pairs], self.weighted)


@dataclass(frozen=True)
class DistanceRow:
    source: int
    dist: list
    hops: Optional[list] = None

    def __getitem__(self, v):
        return self.dist[v]

    def __len__(self):
        return len(self.dist)


@dataclass(frozen=True)
class OverlayGraph:
    """The union graph G ∪ H; parallel edges collapse to the lighter one."""

    base: Graph
    extra: tuple[Edge, ...] = ()
    adjacency: tuple[tuple[tuple[int, float], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        n = self.base.n
        best: dict[tuple[int, int], float] = dict(self.base._weights)
        extra = []
        for u, v, w in self.extra:
            u, v, w = int(u), int(v), float(w)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"overlay edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                continue
            key = (u, v) if u < v else (v, u)
            extra.append((key[0], key[1], w))
            if key not in best or w < best[key]:
                best[key] = w
        object.__setattr__(self, "extra", tuple(sorted(extra)))
        adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
        for (u, v), w in best.items():
            adj[u].append((v, w))
            adj[v].append((u, w))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_combined", tuple(sorted((u, v, w) for (u, v), w in best.items())))

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def weighted(self) -> bool:
        return True

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._combined


def overlay(g: Graph, h: Iterable[Sequence]) -> OverlayGraph:
    return OverlayGraph(g, tuple((e[0], e[1], e[2]) for e in h))


# --------------------------------------------------------------------------
# edge-list text format


def parse_graph(text: str) -> Graph:
    """Parse ``n m weighted|unweighted`` followed by ``m`` lines ``u v [w]``."""
    header = None
    n = m = 0
    weighted = False
    edges: list[Edge] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 3 or fields[2] not in ("weighted", "unweighted"):
                raise ParseError(lineno, "expected header 'n m weighted|unweighted'")
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError(lineno, "vertex and edge counts must be integers") from None
            if n < 0 or m < 0:
                raise ParseError(lineno, "counts must be nonnegative")
            weighted = fields[2] == "weighted"
            header = lineno
            continue
        if len(fields) not in (2, 3):
            raise ParseError(lineno, "expected 'u v [w]'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(lineno, "vertex ids must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex id out of range 0..{n - 1}")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {key}")
        seen.add(key)
        if len(fields) == 3:
            try:
                w = float(fields[2])
            except ValueError:
                raise ParseError(lineno, f"bad weight {fields[2]!r}") from None
        else:
            w = 1.0
        if weighted:
            if not w >= 1:
                raise ParseError(lineno, f"weight {fields[2]} is below 1")
        elif w != 1:
            raise ParseError(lineno, "unweighted graph with a non-unit weight")
        edges.append((u, v, w if weighted else 1))
    if header is None:
        raise ParseError(1, "empty document")
    if len(edges) != m:
        raise ParseError(header, f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges, weighted)


def format_weight(w: float) -> str:
    w = float(w)
    return str(int(w)) if w.is_integer() else repr(w)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m} {'weighted' if g.weighted else 'unweighted'}"]
    for u, v, w in g.edges:
        lines.append(f"{u} {v} {format_weight(w)}" if g.weighted else f"{u} {v}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# single-source oracles


def sssp(g, s: int) -> DistanceRow:
    """Exact distances from ``s``; unreachable vertices get UNREACHABLE."""
    n = g.n
    if not 0 <= s < n:
        raise GraphError(f"source {s} outside 0..{n - 1}")
    dist = [UNREACHABLE] * n
    hops = [None] * n
    dist[s] = 0
    hops[s] = 0
    adj = g.adjacency
    if not g.weighted:
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for v, _ in adj[u]:
                if dist[v] == UNREACHABLE:
                    dist[v] = du
                    hops[v] = du
                    queue.append(v)
        return DistanceRow(s, dist, hops)
    heap = [(0.0, 0, s)]
    done = [False] * n
    while heap:
        d, h, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in adj[u]:
            nd = d + w
            if nd < dist[v] or (nd == dist[v] and h + 1 < hops[v]):
                dist[v] = nd
                hops[v] = h + 1
                heapq.heappush(heap, (nd, h + 1, v))
    return DistanceRow(s, dist, hops)


def hop_bounded_sssp(g, s: int, beta: int) -> DistanceRow:
    """Shortest ``s``-paths using at most ``beta`` edges (Bellman-Ford rounds).

    ``hops[v]`` is the fewest edges among the optimal walks.
    """
    if beta < 1:
        raise GraphError("hop bound must be a positive integer")
    n = g.n
    if not 0 <= s < n:
        raise GraphError(f"source {s} outside 0..{n - 1}")
    adj = g.adjacency
    dist = [UNREACHABLE] * n
    hops = [None] * n
    dist[s] = 0
    hops[s] = 0
    frontier = [s]
    for rnd in range(1, beta + 1):
        # Jacobi update: relax only from values fixed in the previous round.
        new = {}
        for u in frontier:
            du = dist[u]
            for v, w in adj[u]:
                nd = du + w
                if nd < dist[v] and nd < new.get(v, UNREACHABLE):
                    new[v] = nd
        if not new:
            break
        for v, d in new.items():
            dist[v] = d
            hops[v] = rnd
        frontier = sorted(new)
    return DistanceRow(s, dist, hops)


# --------------------------------------------------------------------------
# all-pairs oracles (dense, numpy)


def _csr(g) -> csr_matrix:
    n = g.n
    if not g.edges:
        return csr_matrix((n, n))
    u, v, w = zip(*g.edges)
    return csr_matrix((np.asarray(w, dtype=float), (np.asarray(u), np.asarray(v))), shape=(n, n))


def all_pairs_distances(g, sources: Optional[Sequence[int]] = None) -> np.ndarray:
    """Exact distance matrix (rows = sources), ``inf`` when unreachable."""
    n = g.n
    idx = None if sources is None else np.asarray(sources, dtype=int)
    if n == 0:
        return np.zeros((0, 0))
    if not g.edges:
        rows = np.arange(n) if idx is None else idx
        out = np.full((len(rows), n), np.inf)
        out[np.arange(len(rows)), rows] = 0.0
        return out
    return shortest_path(
        _csr(g), method="D", directed=False, unweighted=not g.weighted, indices=idx
    )


def hop_bounded_all_pairs(
    g, beta: int, sources: Optional[Sequence[int]] = None, block: int = 128
) -> np.ndarray:
    """β-hop-bounded distances from every source, vectorised over sources."""
    if beta < 1:
        raise GraphError("hop bound must be a positive integer")
    n = g.n
    rows = np.arange(n) if sources is None else np.asarray(sources, dtype=int)
    out = np.full((len(rows), n), np.inf)
    out[np.arange(len(rows)), rows] = 0.0
    if not g.edges or n == 0:
        return out
    eu, ev, ew = (np.asarray(a) for a in zip(*g.edges))
    src = np.concatenate([eu, ev]).astype(int)
    dst = np.concatenate([ev, eu]).astype(int)
    w = np.concatenate([ew, ew]).astype(float)
    order = np.argsort(dst, kind="stable")
    src, dst, w = src[order], dst[order], w[order]
    targets, starts = np.unique(dst, return_index=True)
    for lo in range(0, len(rows), block):
        cur = out[lo:lo + block]
        for _ in range(beta):
            cand = np.minimum.reduceat(cur[:, src] + w, starts, axis=1)
            improved = cand < cur[:, targets]
            if not improved.any():
                break
            nxt = cur.copy()
            nxt[:, targets] = np.minimum(cur[:, targets], cand)
            cur = nxt
        out[lo:lo + block] = cur
    return out


def aspect_ratio(g) -> float:
    """max finite pairwise distance / min positive pairwise distance."""
    if g.n < 2:
        raise GraphError("aspect ratio is undefined for fewer than two vertices")
    d = all_pairs_distances(g)
    finite = d[np.isfinite(d) & (d > 0)]
    if finite.size == 0:
        raise GraphError("aspect ratio is undefined without a connected pair")
    return float(finite.max() / finite.min())


def max_distance(g) -> float:
    d = all_pairs_distances(g)
    finite = d[np.isfinite(d)]
    return float(finite.max()) if finite.size else 0.0


def close_enough(a: float, b: float, tol: float = REL_TOL) -> bool:
    if a == b:
        return True
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))
