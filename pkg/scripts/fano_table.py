"""Anticanonical degrees on the Mori generators and the resulting verdict, one row per (family, n)."""
import argparse

from isoblow.picard_cones import fano_classify


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=10)
    args = ap.parse_args()
    for f, lo in (("LG", 1), ("OG", 2)):
        for n in range(lo, args.nmax + 1):
            r = fano_classify(f, n)
            degrees = " ".join(f"{name}={v}" for name, v in r.table)
            print(f"{f}\t{n}\t{r.verdict}\t{degrees}")


if __name__ == "__main__":
    main()
