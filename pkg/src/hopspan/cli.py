"""Command-line entry point.

Exit codes: 0 pass, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .edgeset import format_edge_set, parse_edge_set
from .generators import FAMILIES, GeneratorError, gen
from .graph import GraphError, format_graph, parse_graph
from .hopset import build_hopset, hopset_bound
from .params import ParameterError
from .spanner import build_spanner, spanner_bound
from .sweep import UsageError, load_config, run
from .tz import build_tz, tz_bounds, tz_hopset_stretch
from .verify import size_report, verify_emulator, verify_hopset, verify_spanner

REPORT_COLUMNS = ("construction", "pairsChecked", "worstMult", "worstAdd", "violationCount", "size", "pass")


def _emit(text: str, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read_graph(path):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return parse_graph(text)


def _report_text(reports, fmt: str) -> str:
    if fmt == "json":
        body = reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
        return json.dumps(body, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("eps",) + REPORT_COLUMNS)
    for r in reports:
        j = r.to_json()
        w.writerow([r.params.get("eps", "")] + [j[k] if k != "size" else j["size"].get("edges", "") for k in REPORT_COLUMNS])
    return buf.getvalue()


def _finish(reports, args) -> int:
    text = _report_text(reports, args.format)
    if args.report:
        Path(args.report).write_text(text)
    else:
        sys.stderr.write(text)
    failed = [r for r in reports if not r.passed]
    for r in failed:
        for v in r.violations[:10]:
            sys.stderr.write(f"violation {v.kind} ({v.u}, {v.v}) dG={v.d_g} dH={v.d_h} bound={v.bound}\n")
    return 1 if failed else 0


def cmd_gen(args) -> int:
    params = {}
    for item in args.param or []:
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {item!r}")
        try:
            params[key] = json.loads(val)
        except json.JSONDecodeError:
            params[key] = val
    if args.weighted:
        params["weighted"] = True
    if args.w_max is not None:
        params["w_max"] = args.w_max
    g = gen(args.family, args.n, params, args.seed)
    _emit(format_graph(g), args.out)
    return 0


def cmd_spanner(args) -> int:
    g = _read_graph(args.graph)
    res = build_spanner(g, args.eps, args.kappa)
    head = f"spanner eps={args.eps} kappa={args.kappa}"
    _emit(format_edge_set(res.edges, g.n, head), args.out)
    if args.summary:
        Path(args.summary).write_text(json.dumps(res.summary(), indent=2, sort_keys=True) + "\n")
    if args.partition:
        Path(args.partition).write_text(res.partition.dump())
    if not args.verify:
        return 0
    rep = verify_spanner(g, res.edges, *spanner_bound(args.eps, args.kappa))
    rep.params["eps"] = args.eps
    rep.size = size_report(res.edges, g.n, args.kappa, args.eps, "spanner")
    return _finish([rep], args)


def cmd_hopset(args) -> int:
    g = _read_graph(args.graph)
    res = build_hopset(g, args.eps, args.kappa, skip_short=not args.all_scales)
    head = f"hopset eps={args.eps} kappa={args.kappa}"
    _emit(format_edge_set(res.edges, g.n, head), args.out)
    if args.summary:
        Path(args.summary).write_text(json.dumps(res.summary(), indent=2, sort_keys=True) + "\n")
    if not args.verify:
        return 0
    rep = verify_hopset(g, res.edges, *hopset_bound(args.eps, args.kappa))
    rep.params["eps"] = args.eps
    rep.size = size_report(res.edges, g.n, args.kappa, args.eps, "hopset")
    return _finish([rep], args)


def _tz_reports(g, h, kappa, eps_list, mode):
    out = []
    for eps in eps_list:
        eps_eff, beta_add, beta_hops = tz_bounds(eps, kappa)
        if mode == "tz-hopset":
            rep = verify_hopset(g, h, tz_hopset_stretch(eps, kappa), beta_hops, "tz-hopset")
        else:
            rep = verify_emulator(g, h, eps_eff, beta_add)
        rep.params["eps"] = eps
        rep.size = size_report(h, g.n, kappa, eps, "tz")
        out.append(rep)
    return out


def cmd_tz(args) -> int:
    g = _read_graph(args.graph)
    res = build_tz(g, args.kappa, args.seed)
    head = f"tz kappa={args.kappa} seed={args.seed}"
    _emit(format_edge_set(res.edges, g.n, head), args.out)
    if args.summary:
        Path(args.summary).write_text(json.dumps(res.summary(), indent=2, sort_keys=True) + "\n")
    if args.hierarchy:
        Path(args.hierarchy).write_text(res.hierarchy.dump())
    if not args.eps:
        return 0
    mode = "tz-hopset" if g.weighted else "tz-emulator"
    return _finish(_tz_reports(g, res.edges, args.kappa, args.eps, mode), args)


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    try:
        _, h = parse_edge_set(Path(args.edges).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {args.edges}: {exc}") from None
    if not args.eps:
        raise UsageError("--eps needs at least one value")
    c = args.construction
    reports = []
    if c in ("tz-emulator", "tz-hopset"):
        reports = _tz_reports(g, h, args.kappa, args.eps, c)
    else:
        for eps in args.eps:
            if c == "spanner":
                rep = verify_spanner(g, h, *spanner_bound(eps, args.kappa))
            else:
                rep = verify_hopset(g, h, *hopset_bound(eps, args.kappa))
            rep.params["eps"] = eps
            rep.size = size_report(h, g.n, args.kappa, eps, c)
            reports.append(rep)
    args.report = args.report or args.out
    return _finish(reports, args)


def cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    ok, rows = run(cfg, args.out, jobs=args.jobs, corrupt_h=args.corrupt)
    bad = [r for r in rows if not r["pass"]]
    print(f"{len(rows)} rows, {len(bad)} failing; results in {args.out}")
    for r in bad:
        print(f"FAIL {r['construction']} n={r['n']} kappa={r['kappa']} eps={r['eps']} seed={r['seed']}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopspan", description="Build and verify spanners, hopsets and emulators.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a seeded graph")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("-n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--weighted", action="store_true")
    g.add_argument("--w-max", type=int, default=None)
    g.add_argument("--param", action="append", metavar="KEY=VALUE", help="family parameter, e.g. p=0.2 or radius=0.3")
    g.add_argument("--out", default=None)
    g.set_defaults(func=cmd_gen)

    def build_flags(sp):
        sp.add_argument("graph", help="edge-list file, or - for stdin")
        sp.add_argument("--kappa", type=int, required=True)
        sp.add_argument("--out", default=None, help="edge-set output (default stdout)")
        sp.add_argument("--summary", default=None, help="summary JSON path")
        sp.add_argument("--report", default=None, help="verification report path (default stderr)")
        sp.add_argument("--format", choices=("json", "csv"), default="json")

    s = sub.add_parser("spanner", help="near-additive spanner of an unweighted graph")
    build_flags(s)
    s.add_argument("--eps", type=float, required=True)
    s.add_argument("--partition", default=None, help="write the ground-partition dump here")
    s.add_argument("--verify", action="store_true")
    s.set_defaults(func=cmd_spanner)

    h = sub.add_parser("hopset", help="near-exact hopset of a weighted graph")
    build_flags(h)
    h.add_argument("--eps", type=float, required=True)
    h.add_argument("--all-scales", action="store_true", help="do not skip scales already covered by G")
    h.add_argument("--verify", action="store_true")
    h.set_defaults(func=cmd_hopset)

    t = sub.add_parser("tz", help="scale-free emulator / hopset")
    build_flags(t)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--eps", type=float, nargs="*", default=[], help="verify against each of these ε")
    t.add_argument("--hierarchy", default=None, help="write the level dump here")
    t.set_defaults(func=cmd_tz)

    v = sub.add_parser("verify", help="check an edge-set file against a bound")
    v.add_argument("graph")
    v.add_argument("edges")
    v.add_argument("--construction", choices=("spanner", "hopset", "tz-emulator", "tz-hopset"), required=True)
    v.add_argument("--eps", type=float, nargs="+", required=True)
    v.add_argument("--kappa", type=int, required=True)
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--out", default=None, help="report path (default stderr)")
    v.add_argument("--report", default=None, help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("sweep", help="run a JSON experiment config")
    w.add_argument("config")
    w.add_argument("--out", required=True, help="output directory")
    w.add_argument("--jobs", type=int, default=1)
    w.add_argument("--corrupt", action="store_true", help="test mode: corrupt every H before verifying")
    w.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParameterError, GeneratorError, GraphError) as exc:
        print(f"hopspan: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
