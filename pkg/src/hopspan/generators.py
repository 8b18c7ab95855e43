"""Seeded graph families for experiments.  Same arguments, same graph."""
from __future__ import annotations

import math
import random

from .graph import Graph

FAMILIES = ("gnp", "grid", "geometric", "path", "cycle", "star")


class GeneratorError(ValueError):
    pass


def default_p(n: int) -> float:
    """2 ln n / n, comfortably above the connectivity threshold."""
    return min(1.0, 2 * math.log(n) / n) if n > 1 else 0.0


def default_radius(n: int) -> float:
    return min(1.5, 1.5 * math.sqrt(math.log(max(n, 2)) / (math.pi * max(n, 1))))


def _weights(rng, count, weighted, w_max):
    if not weighted:
        return [1] * count
    return [rng.randint(1, w_max) for _ in range(count)]


def gnp(n, p=None, seed=0, weighted=False, w_max=8) -> Graph:
    p = default_p(n) if p is None else p
    if not 0 <= p <= 1:
        raise GeneratorError("p must lie in [0, 1]")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    ws = _weights(rng, len(pairs), weighted, w_max)
    return Graph(n, [(u, v, w) for (u, v), w in zip(pairs, ws)], weighted)


def grid(n=None, rows=None, cols=None, seed=0, weighted=False, w_max=8) -> Graph:
    if rows is None or cols is None:
        if n is None:
            raise GeneratorError("grid needs n or rows and cols")
        side = math.isqrt(n)
        if side * side != n:
            raise GeneratorError("grid needs a square n, or explicit rows and cols")
        rows = cols = side
    pairs = []
    for r in range(rows):
        for c in range(cols):
            u = r * cols + c
            if c + 1 < cols:
                pairs.append((u, u + 1))
            if r + 1 < rows:
                pairs.append((u, u + cols))
    rng = random.Random(seed)
    ws = _weights(rng, len(pairs), weighted, w_max)
    return Graph(rows * cols, [(u, v, w) for (u, v), w in zip(pairs, ws)], weighted)


def geometric(n, radius=None, seed=0, w_max=8, weighted=True) -> Graph:
    """Random points in the unit square, joined when within ``radius``.

    Weight = 1 + round((w_max - 1) * length / radius), so weights lie in [1, w_max].
    """
    radius = default_radius(n) if radius is None else radius
    if radius <= 0:
        raise GeneratorError("radius must be positive")
    rng = random.Random(seed)
    pts = [(rng.random(), rng.random()) for _ in range(n)]
    edges = []
    for u in range(n):
        xu, yu = pts[u]
        for v in range(u + 1, n):
            d = math.hypot(xu - pts[v][0], yu - pts[v][1])
            if d <= radius:
                w = 1 + round((w_max - 1) * d / radius) if weighted else 1
                edges.append((u, v, w))
    return Graph(n, edges, weighted)


def path(n, seed=0, weighted=False, w_max=8) -> Graph:
    rng = random.Random(seed)
    ws = _weights(rng, max(n - 1, 0), weighted, w_max)
    return Graph(n, [(i, i + 1, ws[i]) for i in range(n - 1)], weighted)


def cycle(n, seed=0, weighted=False, w_max=8) -> Graph:
    if n < 3:
        raise GeneratorError("a cycle needs at least 3 vertices")
    rng = random.Random(seed)
    ws = _weights(rng, n, weighted, w_max)
    return Graph(n, [(i, (i + 1) % n, ws[i]) for i in range(n)], weighted)


def star(n, seed=0, weighted=False, w_max=8) -> Graph:
    rng = random.Random(seed)
    ws = _weights(rng, max(n - 1, 0), weighted, w_max)
    return Graph(n, [(0, i, ws[i - 1]) for i in range(1, n)], weighted)


def gen(family: str, n: int, params: dict | None = None, seed: int = 0) -> Graph:
    params = dict(params or {})
    if n < 1:
        raise GeneratorError("n must be positive")
    if params.get("w_max", 8) < 1:
        raise GeneratorError("w_max must be at least 1")
    builders = {
        "gnp": gnp,
        "grid": grid,
        "geometric": geometric,
        "path": path,
        "cycle": cycle,
        "star": star,
    }
    if family not in builders:
        raise GeneratorError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    try:
        return builders[family](n, seed=seed, **params)
    except TypeError as exc:
        raise GeneratorError(f"bad parameters for {family}: {exc}") from None
