"""Regenerate src/volterrakit/data/golden.csv with the slow reference oracle."""
import argparse

from volterrakit import oracle


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(oracle.GOLDEN_PATH))
    args = ap.parse_args()
    path = oracle.write_golden(args.out)
    for row in oracle.read_golden(path):
        print(f"{row['function']:>9} x={row['x']:<4} alpha={row['alpha']:<4} "
              f"beta={row['beta']:<4} s={row['s']:<4} {row['value']!r} +- {row['bound']:.1e}")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
