"""Run every verify suite over a range of n for both families; exit 1 if any check fails."""
import argparse
import io
import json
import sys

from isoblow.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=5)
    ap.add_argument("--trials", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    worst = 0
    for fam, lo in (("lg", 1), ("og", 2)):
        for n in range(lo, args.nmax + 1):
            out = io.StringIO()
            code = cli_main(["verify", "--family", fam, "--n", str(n), "--trials", str(args.trials),
                             "--seed", str(args.seed)], stdout=out)
            worst = max(worst, code)
            for r in json.loads(out.getvalue())["results"]:
                status = "skip" if "skipped" in r else ("ok" if r["passed"] else "FAIL")
                print(f"{fam}\t{n}\t{r['suite']}\t{status}\t{r.get('checks', '')}")
                if status == "FAIL":
                    print(json.dumps(r["counterexample"]), file=sys.stderr)
    sys.exit(worst)


if __name__ == "__main__":
    main()
