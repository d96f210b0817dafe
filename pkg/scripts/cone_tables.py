"""Print nef-cone rays (double description) next to the claimed generators and the chain-polytope cone.

    python3 scripts/cone_tables.py --family og --nmax 9
"""
import argparse
import time

from isoblow.picard_cones import PicardBasis, chain_polytope_rays, cones_equal, nef_claimed, nef_extremal_rays


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--family", choices=("lg", "og", "both"), default="both")
    ap.add_argument("--nmax", type=int, default=6)
    ap.add_argument("--rays", action="store_true", help="list every ray")
    args = ap.parse_args()
    fams = ["LG", "OG"] if args.family == "both" else [args.family.upper()]
    print("family\tn\trank\trays\tclaimed\tchain\tseconds")
    for f in fams:
        for n in range(2 if f == "LG" else 3, args.nmax + 1):
            t = time.perf_counter()
            cone = nef_extremal_rays(f, n)
            dt = time.perf_counter() - t
            ok_claim = cones_equal(cone, nef_claimed(f, n))
            ok_chain = cones_equal(cone, chain_polytope_rays(f, n))
            print(f"{f}\t{n}\t{PicardBasis(f, n).rank}\t{len(cone.rays)}\t{ok_claim}\t{ok_chain}\t{dt:.2f}")
            if args.rays:
                for r in cone.rays:
                    print("\t\t" + " ".join(map(str, r)))


if __name__ == "__main__":
    main()
