"""Batch experiments: build, verify against the matching envelope, log CSV + JSON."""
from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .edgeset import EdgeSet, Provenance
from .generators import FAMILIES, gen
from .graph import Graph, all_pairs_distances
from .hopset import build_hopset, hopset_bound
from .params import ParameterError
from .spanner import build_spanner, spanner_bound
from .tz import build_tz, tz_bounds, tz_hopset_stretch
from .verify import size_report, verify_emulator, verify_hopset, verify_spanner

CONSTRUCTIONS = ("spanner", "hopset", "tz")
CSV_COLUMNS = (
    "construction", "family", "n", "m", "kappa", "eps", "seed",
    "size", "worst_mult", "worst_add", "pass", "wall_time",
)


class UsageError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    family: str
    n: list[int]
    construction: str
    eps: list[float]
    kappa: list[int]
    seeds: list[int]
    params: dict = field(default_factory=dict)
    weighted: bool = False
    w_max: int = 8
    name: str = "sweep"

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        try:
            cfg = cls(
                family=raw["family"],
                n=[int(x) for x in _as_list(raw["n"])],
                construction=raw["construction"],
                eps=[float(x) for x in _as_list(raw.get("eps", []))],
                kappa=[int(x) for x in _as_list(raw["kappa"])],
                seeds=[int(x) for x in _as_list(raw["seeds"])],
                params=dict(raw.get("params", {})),
                weighted=bool(raw.get("weighted", False)),
                w_max=int(raw.get("w_max", 8)),
                name=str(raw.get("name", "sweep")),
            )
        except KeyError as exc:
            raise UsageError(f"config is missing {exc.args[0]!r}") from None
        except (TypeError, ValueError) as exc:
            raise UsageError(f"bad config value: {exc}") from None
        cfg.validate()
        return cfg

    def validate(self):
        if self.family not in FAMILIES:
            raise UsageError(f"unknown family {self.family!r}")
        if self.construction not in CONSTRUCTIONS:
            raise UsageError(f"unknown construction {self.construction!r}")
        if not self.eps:
            raise UsageError("eps list is empty")
        for name in ("n", "kappa", "seeds"):
            if not getattr(self, name):
                raise UsageError(f"{name} list is empty")
        if any(k < 1 for k in self.kappa):
            raise UsageError("kappa values must be positive")
        if self.construction == "spanner" and self.weighted:
            raise UsageError("spanners need unweighted graphs")

    def graph(self, n: int, seed: int) -> Graph:
        params = dict(self.params)
        if self.family == "geometric":
            params.setdefault("weighted", self.weighted)
            params.setdefault("w_max", self.w_max)
        else:
            params.setdefault("weighted", self.weighted)
            if self.weighted:
                params.setdefault("w_max", self.w_max)
        return gen(self.family, n, params, seed)

    def items(self) -> list[dict]:
        out = []
        for n in self.n:
            for seed in self.seeds:
                for kappa in self.kappa:
                    if self.construction == "tz":
                        out.append({"n": n, "seed": seed, "kappa": kappa, "eps": list(self.eps)})
                    else:
                        for eps in self.eps:
                            out.append({"n": n, "seed": seed, "kappa": kappa, "eps": [eps]})
        return out


def _as_list(x):
    return list(x) if isinstance(x, (list, tuple)) else [x]


def corrupt(edges: EdgeSet, g: Graph, construction: str) -> EdgeSet:
    """Make H provably wrong: a non-graph edge for spanners, a short weight otherwise."""
    bad = edges.copy()
    if construction == "spanner":
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if not g.has_edge(u, v):
                    bad.add(u, v, 1, Provenance("corrupt"))
                    return bad
        return EdgeSet()
    d = all_pairs_distances(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if 1 < d[u, v] < float("inf"):
                out = EdgeSet()
                for a, b, w in bad:
                    if (a, b) != (u, v):
                        out.add(a, b, w, bad.provenance(a, b))
                out.add(u, v, float(d[u, v]) / 2, Provenance("corrupt"))
                return out
    return bad


def run_item(cfg: ExperimentConfig, item: dict, corrupt_h: bool = False) -> list[tuple[dict, dict]]:
    """Build once, verify for every eps of the item; return (csv row, json report) pairs."""
    g = cfg.graph(item["n"], item["seed"])
    kappa, seed = item["kappa"], item["seed"]
    results = []
    start = time.perf_counter()
    if cfg.construction == "spanner":
        eps = item["eps"][0]
        built = build_spanner(g, eps, kappa)
        h = corrupt(built.edges, g, "spanner") if corrupt_h else built.edges
        rep = verify_spanner(g, h, *spanner_bound(eps, kappa))
        rep.size = size_report(h, g.n, kappa, eps, "spanner")
        results.append((eps, rep))
    elif cfg.construction == "hopset":
        eps = item["eps"][0]
        built = build_hopset(g, eps, kappa)
        h = corrupt(built.edges, g, "hopset") if corrupt_h else built.edges
        rep = verify_hopset(g, h, *hopset_bound(eps, kappa))
        rep.size = size_report(h, g.n, kappa, eps, "hopset")
        results.append((eps, rep))
    else:
        built = build_tz(g, kappa, seed)
        h = corrupt(built.edges, g, "tz") if corrupt_h else built.edges
        for eps in item["eps"]:
            eps_eff, beta_add, beta_hops = tz_bounds(eps, kappa)
            if g.weighted:
                rep = verify_hopset(g, h, tz_hopset_stretch(eps, kappa), beta_hops, "tz-hopset")
            else:
                rep = verify_emulator(g, h, eps_eff, beta_add)
            rep.size = size_report(h, g.n, kappa, eps, "tz")
            results.append((eps, rep))
    wall = time.perf_counter() - start
    out = []
    for eps, rep in results:
        rep.params.update({"family": cfg.family, "n": g.n, "m": g.m, "kappa": kappa, "eps": eps, "seed": seed})
        row = {
            "construction": rep.construction,
            "family": cfg.family,
            "n": g.n,
            "m": g.m,
            "kappa": kappa,
            "eps": eps,
            "seed": seed,
            "size": rep.size["edges"],
            "worst_mult": f"{rep.worst_mult:.6f}",
            "worst_add": f"{rep.worst_add:.6f}",
            "pass": int(rep.passed),
            "wall_time": f"{wall:.4f}",
        }
        out.append((row, rep.to_json()))
    return out


def _run_packed(args):
    return run_item(*args)


def run(cfg: ExperimentConfig, out_dir, jobs: int = 1, corrupt_h: bool = False) -> tuple[bool, list[dict]]:
    """Run every item; writes ``reports/*.json`` and ``summary.csv`` under ``out_dir``."""
    out_dir = Path(out_dir)
    (out_dir / "reports").mkdir(parents=True, exist_ok=True)
    items = cfg.items()
    packed = [(cfg, it, corrupt_h) for it in items]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_packed, packed))
    else:
        results = [_run_packed(p) for p in packed]
    rows = []
    ok = True
    for item_results in results:
        for row, report in item_results:
            rows.append(row)
            ok = ok and bool(row["pass"])
            stem = f"{cfg.name}_{row['construction']}_n{row['n']}_k{row['kappa']}_e{row['eps']}_s{row['seed']}"
            (out_dir / "reports" / f"{stem}.json").write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    (out_dir / "summary.csv").write_text(buf.getvalue())
    (out_dir / "config.json").write_text(json.dumps(asdict(cfg), indent=2, sort_keys=True) + "\n")
    return ok, rows


def load_config(path) -> ExperimentConfig:
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    try:
        return ExperimentConfig.from_dict(raw)
    except ParameterError as exc:
        raise UsageError(str(exc)) from None
