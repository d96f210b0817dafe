"""Degrees in b_1 of the fibre-curve coordinates on the l = 0 chart, for a few seeded generic q."""
import argparse
import random
from collections import Counter

from isoblow.lm_resolution import fiber_coords_template, fiber_degree


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=6)
    ap.add_argument("--samples", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    rows = [("LG", "plucker", 1), ("OG", "spinor", 2), ("OG", "plucker", 2)]
    print("family\tembedding\tn\tdegrees seen\tdegree histogram (last sample)")
    for f, emb, lo in rows:
        for n in range(lo, args.nmax + 1):
            seen = set()
            for _ in range(args.samples):
                r = fiber_degree(f, n, fiber_coords_template(f, n, rng), embedding=emb)
                seen.add(r.degree)
            hist = Counter(d for _, d in r.table)
            print(f"{f}\t{emb}\t{n}\t{sorted(seen)}\t{dict(sorted(hist.items()))}")


if __name__ == "__main__":
    main()
