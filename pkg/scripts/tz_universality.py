"""One scale-free build per graph, checked against a range of eps values."""
import argparse
import csv
import sys

from hopspan.generators import geometric, gnp
from hopspan.tz import build_tz, tz_bounds, tz_hopset_stretch
from hopspan.verify import verify_emulator, verify_hopset


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=128)
    ap.add_argument("--kappa", type=int, default=7)
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--steps", type=int, default=6, help="eps = 1/6 * 2^-t for t < steps")
    args = ap.parse_args()
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["graph", "seed", "size", "eps", "check", "worst_mult", "worst_add", "pass"])
    for s in range(args.seeds):
        for name, g in (("gnp", gnp(args.n, seed=s)), ("geometric", geometric(args.n, seed=s))):
            h = build_tz(g, args.kappa, seed=s).edges
            for t in range(args.steps):
                eps = (1 / 6) * 2 ** -t
                eps_eff, beta_add, beta_hops = tz_bounds(eps, args.kappa)
                if g.weighted:
                    rep = verify_hopset(g, h, tz_hopset_stretch(eps, args.kappa), beta_hops, "tz-hopset")
                else:
                    rep = verify_emulator(g, h, eps_eff, beta_add)
                w.writerow([name, s, len(h), f"{eps:.6f}", rep.construction,
                            f"{rep.worst_mult:.4f}", f"{rep.worst_add:.4f}", int(rep.passed)])


if __name__ == "__main__":
    main()
