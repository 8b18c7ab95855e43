"""Weighted edge sets tagged with where each edge came from."""
from __future__ import annotations

from collections import Counter
from typing import Iterator, NamedTuple, Optional

from .graph import Graph, GraphError, format_weight


class Provenance(NamedTuple):
    role: str
    phase: Optional[int] = None
    scale: Optional[int] = None


class EdgeSet:
    """Undirected vertex pairs with a weight and a provenance tag.

    Re-adding a pair keeps the first provenance and the smaller weight.
    """

    def __init__(self):
        self._edges: dict[tuple[int, int], tuple[float, Provenance]] = {}

    def add(self, u: int, v: int, w: float, prov: Provenance) -> bool:
        if u == v:
            return False
        key = (u, v) if u < v else (v, u)
        old = self._edges.get(key)
        if old is not None:
            if w < old[0]:
                self._edges[key] = (w, old[1])
            return False
        self._edges[key] = (w, prov)
        return True

    def __len__(self) -> int:
        return len(self._edges)

    def __contains__(self, pair) -> bool:
        u, v = pair[0], pair[1]
        return ((u, v) if u < v else (v, u)) in self._edges

    def __iter__(self) -> Iterator[tuple[int, int, float]]:
        for (u, v), (w, _) in sorted(self._edges.items()):
            yield u, v, w

    def weight(self, u: int, v: int) -> float:
        return self._edges[(u, v) if u < v else (v, u)][0]

    def provenance(self, u: int, v: int) -> Provenance:
        return self._edges[(u, v) if u < v else (v, u)][1]

    def items(self):
        return sorted(self._edges.items())

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def role_counts(self) -> dict[str, int]:
        return dict(sorted(Counter(p.role for _, p in self._edges.values()).items()))

    def phase_counts(self) -> dict[str, int]:
        c = Counter(
            f"{p.role}:{p.phase}" if p.phase is not None else p.role
            for _, p in self._edges.values()
        )
        return dict(sorted(c.items()))

    def copy(self) -> "EdgeSet":
        out = EdgeSet()
        out._edges = dict(self._edges)
        return out

    def union(self, other: "EdgeSet") -> "EdgeSet":
        out = self.copy()
        for (u, v), (w, p) in other.items():
            out.add(u, v, w, p)
        return out

    def as_graph(self, n: int, weighted: bool = True) -> Graph:
        if weighted:
            return Graph(n, [(u, v, w) for u, v, w in self], True)
        return Graph(n, [(u, v) for u, v, _ in self], False)

    def __repr__(self):
        return f"EdgeSet({len(self)} edges, {self.role_counts()})"


def format_edge_set(h: EdgeSet, n: int, comment: str = "") -> str:
    """``n m`` header then ``u v w role phase scale`` rows (``-`` for none)."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{n} {len(h)}")
    for (u, v), (w, p) in h.items():
        phase = "-" if p.phase is None else str(p.phase)
        scale = "-" if p.scale is None else str(p.scale)
        lines.append(f"{u} {v} {format_weight(w)} {p.role} {phase} {scale}")
    return "\n".join(lines) + "\n"


def parse_edge_set(text: str) -> tuple[int, EdgeSet]:
    n = m = None
    h = EdgeSet()
    count = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        f = line.split()
        try:
            if n is None:
                n, m = int(f[0]), int(f[1])
                continue
            u, v, w = int(f[0]), int(f[1]), float(f[2])
            role = f[3] if len(f) > 3 else "edge"
            phase = None if len(f) < 5 or f[4] == "-" else int(f[4])
            scale = None if len(f) < 6 or f[5] == "-" else int(f[5])
        except (ValueError, IndexError):
            raise GraphError(f"line {lineno}: malformed edge-set row") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphError(f"line {lineno}: bad vertex pair ({u}, {v})")
        h.add(u, v, w, Provenance(role, phase, scale))
        count += 1
    if n is None:
        raise GraphError("empty edge-set document")
    if count != m:
        raise GraphError(f"edge-set header announces {m} rows, found {count}")
    return n, h
