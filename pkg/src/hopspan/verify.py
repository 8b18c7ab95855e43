"""Oracle-backed checks of spanner, emulator and hopset guarantees.

All pairs are checked exactly up to ``EXACT_LIMIT`` vertices; larger graphs
use a fixed-seed uniform sample of ``SAMPLE_PAIRS`` pairs.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .edgeset import EdgeSet
from .graph import REL_TOL, Graph, all_pairs_distances, hop_bounded_all_pairs, overlay

EXACT_LIMIT = 512
SAMPLE_PAIRS = 100_000
SAMPLE_SEED = 0
MAX_VIOLATIONS = 50


def _num(x):
    if x is None:
        return None
    x = float(x)
    if math.isinf(x):
        return None
    return int(x) if x.is_integer() else x


@dataclass
class Violation:
    kind: str  # containment | stretch | lower | weight
    u: int
    v: int
    d_g: float
    d_h: Optional[float]
    bound: Optional[float]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "u": self.u,
            "v": self.v,
            "dG": _num(self.d_g),
            "dH": _num(self.d_h),
            "bound": _num(self.bound),
        }


@dataclass
class StretchReport:
    construction: str
    params: dict
    pairs_checked: int = 0
    worst_mult: float = 1.0
    worst_add: float = 0.0
    violations: list[Violation] = field(default_factory=list)
    violation_count: int = 0
    size: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def record(self, v: Violation):
        self.violation_count += 1
        if len(self.violations) < MAX_VIOLATIONS:
            self.violations.append(v)

    def merge(self, other: "StretchReport") -> "StretchReport":
        out = StretchReport(self.construction, dict(self.params))
        out.pairs_checked = self.pairs_checked + other.pairs_checked
        out.worst_mult = max(self.worst_mult, other.worst_mult)
        out.worst_add = max(self.worst_add, other.worst_add)
        for v in sorted(self.violations + other.violations, key=lambda x: (x.kind, x.u, x.v)):
            out.record(v)
        out.violation_count = self.violation_count + other.violation_count
        out.size = dict(self.size)
        return out

    def to_json(self) -> dict:
        return {
            "construction": self.construction,
            "params": self.params,
            "pairsChecked": self.pairs_checked,
            "worstMult": None if math.isinf(self.worst_mult) else round(self.worst_mult, 12),
            "worstAdd": None if math.isinf(self.worst_add) else round(self.worst_add, 12),
            "violationCount": self.violation_count,
            "violations": [v.to_json() for v in self.violations],
            "size": self.size,
            "pass": self.passed,
        }


def _pairs(n: int):
    """(sources, mask) of the pairs to check: exact upper triangle or a sample."""
    if n <= EXACT_LIMIT:
        return np.arange(n), np.triu(np.ones((n, n), dtype=bool), k=1)
    rng = random.Random(SAMPLE_SEED)
    picked = set()
    while len(picked) < min(SAMPLE_PAIRS, n * (n - 1) // 2):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            picked.add((min(u, v), max(u, v)))
    sources = np.array(sorted({u for u, _ in picked}))
    pos = {s: k for k, s in enumerate(sources)}
    mask = np.zeros((len(sources), n), dtype=bool)
    for u, v in picked:
        mask[pos[u], v] = True
    return sources, mask


def _stretch_pass(report, sources, dg, dh, mask, eps_eff, beta, integral):
    """Upper-bound check d_H <= (1+eps_eff) d_G + beta on masked finite pairs."""
    check = mask & np.isfinite(dg)
    report.pairs_checked += int(check.sum())
    if not check.any():
        return
    g_vals, h_vals = dg[check], dh[check]
    bound = (1 + eps_eff) * g_vals + beta
    if integral:
        bad = h_vals > np.floor(bound + 1e-9)
    else:
        bad = h_vals > bound * (1 + REL_TOL) + REL_TOL
    pos = g_vals > 0
    if pos.any():
        ratios = np.where(np.isfinite(h_vals[pos]), h_vals[pos] / g_vals[pos], np.inf)
        report.worst_mult = max(report.worst_mult, float(ratios.max()))
    excess = h_vals - (1 + eps_eff) * g_vals
    report.worst_add = max(report.worst_add, float(excess.max()))
    if bad.any():
        rows, cols = np.nonzero(check)
        for k in np.nonzero(bad)[0]:
            report.record(
                Violation("stretch", int(sources[rows[k]]), int(cols[k]), g_vals[k], h_vals[k], bound[k])
            )


def verify_spanner(g: Graph, h, eps_eff: float, beta_eff: float, construction="spanner") -> StretchReport:
    """d_H(u,v) <= (1+ε)d_G(u,v) + β for all pairs, plus H ⊆ E."""
    pairs = _edge_pairs(h)
    report = StretchReport(construction, {"epsEff": eps_eff, "betaEff": beta_eff})
    inside = []
    for u, v in pairs:
        if g.has_edge(u, v):
            inside.append((u, v))
        else:
            report.record(Violation("containment", u, v, math.nan, None, None))
    sub = g.subgraph(inside)
    sources, mask = _pairs(g.n)
    dg = all_pairs_distances(g, sources)
    dh = all_pairs_distances(sub, sources)
    _stretch_pass(report, sources, dg, dh, mask, eps_eff, beta_eff, integral=not g.weighted)
    report.size = {"edges": len(pairs), "graphEdges": g.m}
    return report


def verify_emulator(g: Graph, h, eps_eff: float, beta_add: float, construction="tz-emulator") -> StretchReport:
    """d_G <= d_H <= (1+ε)d_G + β where H is a weighted graph used on its own."""
    triples = _edge_triples(h)
    report = StretchReport(construction, {"epsEff": eps_eff, "betaAdd": beta_add})
    sources, mask = _pairs(g.n)
    dg = all_pairs_distances(g, sources)
    hg = Graph(g.n, triples, True) if triples else Graph(g.n, (), True)
    dh = all_pairs_distances(hg, sources)
    _lower_pass(report, sources, dg, dh, mask)
    _weight_pass(report, g, triples)
    _stretch_pass(report, sources, dg, dh, mask, eps_eff, beta_add, integral=False)
    report.size = {"edges": len(triples)}
    return report


def _lower_pass(report, sources, dg, dh, mask):
    check = mask & np.isfinite(dg)
    low = check & (dh < dg * (1 - REL_TOL) - REL_TOL)
    for r, c in zip(*np.nonzero(low)):
        report.record(Violation("lower", int(sources[r]), int(c), dg[r, c], dh[r, c], dg[r, c]))


def _weight_pass(report, g, triples):
    if not triples:
        return
    ends = sorted({u for u, _, _ in triples})
    rows = all_pairs_distances(g, ends)
    pos = {u: k for k, u in enumerate(ends)}
    for u, v, w in triples:
        d = rows[pos[u], v]
        if not (abs(w - d) <= REL_TOL * max(1.0, d)):
            report.record(Violation("weight", u, v, d, w, d))


def verify_hopset(g: Graph, h, eps_eff: float, beta_hops: int, construction="hopset") -> StretchReport:
    """d_G <= d^(β)_{G∪H} <= (1+ε)d_G for all pairs, and every weight = d_G."""
    triples = _edge_triples(h)
    report = StretchReport(construction, {"epsEff": eps_eff, "betaHops": beta_hops})
    sources, mask = _pairs(g.n)
    dg = all_pairs_distances(g, sources)
    db = hop_bounded_all_pairs(overlay(g, triples), beta_hops, sources)
    _weight_pass(report, g, triples)
    _lower_pass(report, sources, dg, db, mask)
    _stretch_pass(report, sources, dg, db, mask, eps_eff, 0.0, integral=False)
    report.size = {"edges": len(triples)}
    return report


def _edge_pairs(h) -> list[tuple[int, int]]:
    if isinstance(h, EdgeSet):
        return h.pairs()
    return sorted({(min(e[0], e[1]), max(e[0], e[1])) for e in h})


def _edge_triples(h) -> list[tuple[int, int, float]]:
    if isinstance(h, EdgeSet):
        return list(h)
    best: dict = {}
    for u, v, w in h:
        key = (min(u, v), max(u, v))
        if u != v and (key not in best or w < best[key]):
            best[key] = float(w)
    return [(u, v, w) for (u, v), w in sorted(best.items())]


@dataclass
class BunchReport:
    counterexamples: list = field(default_factory=list)  # (kind, u, v, level)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def verify_bunches(g: Graph, hierarchy, pivots, bunches) -> BunchReport:
    """Check pivots and bunches against the definitions using all-pairs distances."""
    d = all_pairs_distances(g)
    out = BunchReport()
    ell = hierarchy.ell
    levels = [np.array(sorted(a), dtype=int) for a in hierarchy.levels]

    def near_a(v, i):
        if i >= ell or levels[i].size == 0:
            return math.inf
        return float(d[v, levels[i]].min())

    for i in range(ell):
        for v in range(g.n):
            p = pivots.pivot[i][v]
            best = near_a(v, i)
            if p is None:
                if math.isfinite(best):
                    out.counterexamples.append(("pivot-missing", v, None, i))
                continue
            if p not in hierarchy.levels[i] or not _close(d[v, p], best):
                out.counterexamples.append(("pivot-not-nearest", v, p, i))
                continue
            if not g.weighted:
                smaller = [a for a in levels[i] if a < p and d[v, a] == best]
                if smaller:
                    out.counterexamples.append(("pivot-tie", v, p, i))
            if i == 0 and p != v:
                out.counterexamples.append(("pivot-level0", v, p, i))
    for u in range(g.n):
        i = hierarchy.level_of(u)
        got = set(bunches.members[u])
        if i == ell - 1:
            want = {v for v in levels[i] if math.isfinite(d[u, v])}
            for v in sorted(want ^ got):
                out.counterexamples.append(("bunch-missing" if v in want else "bunch-extra", u, v, i))
            continue
        t = near_a(u, i + 1)
        p = pivots.pivot[i + 1][u]
        for v in levels[i]:
            v = int(v)
            dv = d[u, v]
            if not math.isfinite(dv):
                inside = False
            elif dv < t * (1 - REL_TOL) - REL_TOL:
                inside = True
            elif dv == t or dv > t * (1 + REL_TOL) + REL_TOL:
                inside = False
            else:
                continue  # within rounding of the threshold
            if inside and v not in got:
                out.counterexamples.append(("bunch-missing", u, v, i))
            if not inside and v in got and v != p:
                out.counterexamples.append(("bunch-extra", u, v, i))
        if p is not None and p not in got:
            out.counterexamples.append(("bunch-pivot-missing", u, p, i))
        for v in got:
            if v not in hierarchy.levels[i] and v != p:
                out.counterexamples.append(("bunch-extra", u, v, i))
    return out


def _close(a, b):
    if a == b:
        return True
    return abs(a - b) <= REL_TOL * max(1.0, abs(a), abs(b))


def size_report(h, n: int, kappa: int, eps: Optional[float] = None, construction: str = "spanner") -> dict:
    """|H| against n^(1+1/κ) and the analytic budget of the construction."""
    size = len(h)
    base = n ** (1 + 1 / kappa) if n > 0 else 0.0
    ell = kappa.bit_length()
    out = {
        "edges": size,
        "nPow": base,
        "ratio": size / base if base else 0.0,
    }
    if isinstance(h, EdgeSet):
        out["roles"] = h.role_counts()
    if construction == "spanner" and eps is not None:
        sum_delta = sum((1 / eps) ** i for i in range(ell))
        out["budget"] = sum_delta * base
        out["sumDelta"] = sum_delta
    elif construction == "tz":
        out["budget"] = ell * base + ell * n
    elif construction == "hopset":
        out["budgetPerScale"] = 2 * ell * base + n
    return out
