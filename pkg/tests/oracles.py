"""Independent brute-force references: enumerate every simple path.

Positive weights make shortest walks simple, so the best simple path with at
most h edges is the h-hop-bounded distance.  Only usable for n <= ~10.
"""
import math


def _adjacency(n, triples):
    adj = [dict() for _ in range(n)]
    for u, v, w in triples:
        if u == v:
            continue
        if v not in adj[u] or w < adj[u][v]:
            adj[u][v] = w
            adj[v][u] = w
    return adj


def path_table(n, triples, s, max_hops=None):
    """best[v][h] = lightest simple s-v path with exactly h edges (inf if none)."""
    max_hops = n - 1 if max_hops is None else min(max_hops, n - 1)
    adj = _adjacency(n, triples)
    best = [[math.inf] * n for _ in range(n)]
    best[s][0] = 0
    seen = [False] * n
    seen[s] = True

    def walk(u, length, hops):
        if hops == max_hops:
            return
        for v, w in adj[u].items():
            if seen[v]:
                continue
            d = length + w
            if d < best[v][hops + 1]:
                best[v][hops + 1] = d
            seen[v] = True
            walk(v, d, hops + 1)
            seen[v] = False

    walk(s, 0, 0)
    return best


def brute_distances(n, triples, beta=None):
    """n x n matrix of (hop-bounded) distances by exhaustive enumeration."""
    out = []
    for s in range(n):
        table = path_table(n, triples, s, beta)
        row = []
        for v in range(n):
            hs = table[v] if beta is None else table[v][: beta + 1]
            row.append(min(hs))
        out.append(row)
    return out


def brute_hops(n, triples, s):
    """Fewest edges over the shortest s-v paths."""
    table = path_table(n, triples, s)
    out = []
    for v in range(n):
        d = min(table[v])
        out.append(None if math.isinf(d) else min(h for h, x in enumerate(table[v]) if x == d))
    return out


def _bad(x, bound, integral):
    if integral:
        return x > math.floor(bound + 1e-9)
    return x > bound * (1 + 1e-9) + 1e-9


def brute_spanner_violations(g, h_pairs, eps, beta):
    """Sorted (kind, u, v) list: non-graph edges, then stretch failures."""
    out = [("containment", u, v) for u, v in sorted(h_pairs) if not g.has_edge(u, v)]
    inside = [(u, v, g.weight(u, v)) for u, v in h_pairs if g.has_edge(u, v)]
    dg = brute_distances(g.n, g.edges)
    dh = brute_distances(g.n, inside)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if math.isfinite(dg[u][v]) and _bad(dh[u][v], (1 + eps) * dg[u][v] + beta, not g.weighted):
                out.append(("stretch", u, v))
    return out


def brute_hopset_violations(g, triples, eps, beta):
    """Sorted (kind, u, v): weight mismatches, lower-bound and stretch failures."""
    dg = brute_distances(g.n, g.edges)
    db = brute_distances(g.n, list(g.edges) + list(triples), beta)
    out = []
    for u, v, w in triples:
        if abs(w - dg[u][v]) > 1e-9 * max(1.0, dg[u][v]):
            out.append(("weight", u, v))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not math.isfinite(dg[u][v]):
                continue
            if db[u][v] < dg[u][v] * (1 - 1e-9) - 1e-9:
                out.append(("lower", u, v))
            if _bad(db[u][v], (1 + eps) * dg[u][v], False):
                out.append(("stretch", u, v))
    return out
