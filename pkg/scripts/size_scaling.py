"""Spanner size vs n on G(n, 2 ln n / n); prints CSV and the log-log slope."""
import argparse
import csv
import math
import sys

import numpy as np

from hopspan.generators import gnp
from hopspan.spanner import build_spanner


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="+", default=[128, 256, 512])
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--eps", type=float, default=0.1)
    ap.add_argument("--kappa", type=int, default=3)
    args = ap.parse_args()
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "seed", "m", "size", "init_superedge", "init_tree", "supercluster", "interconnect"])
    xs, ys = [], []
    for n in args.n:
        for s in range(args.seeds):
            g = gnp(n, seed=s)
            res = build_spanner(g, args.eps, args.kappa)
            roles = res.edges.role_counts()
            w.writerow([n, s, g.m, len(res.edges)] + [roles.get(r, 0) for r in
                                                      ("init-superedge", "init-tree", "supercluster", "interconnect")])
            xs.append(math.log(n))
            ys.append(math.log(len(res.edges)))
    slope = np.polyfit(xs, ys, 1)[0]
    print(f"# slope {slope:.3f} (target <= {1 + 1 / args.kappa + 0.15:.3f})", file=sys.stderr)


if __name__ == "__main__":
    main()
