"""Smallest hop budget at which d^(b)_{G+H} <= (1+eps') d_G holds, with and without H.

Shows how far below the verification envelope the constructions actually sit.
"""
import argparse
import csv
import sys

import numpy as np

from hopspan.generators import geometric, grid, path
from hopspan.graph import all_pairs_distances, hop_bounded_all_pairs, overlay
from hopspan.hopset import build_hopset, hopset_bound
from hopspan.tz import build_tz


def needed_hops(g, h, stretch, limit):
    d = all_pairs_distances(g)
    o = overlay(g, list(h))
    finite = np.isfinite(d)
    lo, hi = 1, limit
    if not (hop_bounded_all_pairs(o, hi)[finite] <= (1 + stretch) * d[finite] + 1e-9).all():
        return None
    while lo < hi:
        mid = (lo + hi) // 2
        if (hop_bounded_all_pairs(o, mid)[finite] <= (1 + stretch) * d[finite] + 1e-9).all():
            hi = mid
        else:
            lo = mid + 1
    return lo


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--eps", type=float, default=0.1)
    ap.add_argument("--kappa", type=int, default=3)
    ap.add_argument("--stretch", type=float, default=0.0, help="eps' used for the profile (0 = exact)")
    args = ap.parse_args()
    graphs = [("wpath256", path(256, seed=1, weighted=True)), ("wgrid16", grid(256, seed=2, weighted=True)),
              ("geo256_sparse", geometric(256, radius=0.1, seed=3))]
    _, envelope = hopset_bound(args.eps, args.kappa)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["graph", "n", "envelope", "hops_G", "hops_hopset", "size_hopset", "hops_tz", "size_tz"])
    for name, g in graphs:
        hs = build_hopset(g, args.eps, args.kappa, skip_short=False).edges
        tz = build_tz(g, args.kappa, seed=0).edges
        w.writerow([name, g.n, envelope, needed_hops(g, [], args.stretch, g.n),
                    needed_hops(g, hs, args.stretch, g.n), len(hs),
                    needed_hops(g, tz, args.stretch, g.n), len(tz)])


if __name__ == "__main__":
    main()
