"""Run the union acceptance grid and print a per-check verdict tally.

Writes the full CSV report when --csv is given. Exit code mirrors
``volterra verify``: 1 when any report fails.
"""
import argparse
import collections
import csv
import time

from volterrakit import cli, grids
from volterrakit import ineqlab as L


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--parallel", type=int, default=1)
    ap.add_argument("--tol", type=float, default=None)
    ap.add_argument("--csv", help="write every report here")
    args = ap.parse_args()

    rows = grids.acceptance_union()
    checks = list(dict.fromkeys(r["check"] for r in rows))
    t0 = time.perf_counter()
    reps = L.sweep(rows, checks, args.tol or cli.default_tol(), args.parallel)
    elapsed = time.perf_counter() - t0

    tally = collections.defaultdict(collections.Counter)
    for rep in reps:
        tally[rep.name][rep.verdict] += 1
    print(f"{'check':<26}{'holds':>7}{'inconcl.':>10}{'fails':>7}")
    for name, c in tally.items():
        print(f"{name:<26}{c[L.HOLDS]:>7}{c[L.INCONCLUSIVE]:>10}{c[L.FAILS]:>7}")
    fails = [r for r in reps if r.failed]
    for rep in fails:
        print(f"FAIL {rep.name} {rep.params} margin={rep.margin!r} error={rep.combined_error!r}")
    print(f"{len(reps)} reports in {elapsed:.1f}s")

    if args.csv:
        cols = cli.verify_columns(checks)
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(cols)
            for rep in reps:
                rec = {"check": rep.name, **rep.params, "lhs": rep.lhs, "rhs": rep.rhs,
                       "margin": rep.margin, "combined_error": rep.combined_error,
                       "verdict": rep.verdict}
                w.writerow([cli.fmt(rec[c]) if c in rec else "" for c in cols])
    raise SystemExit(1 if fails else 0)


if __name__ == "__main__":
    main()
