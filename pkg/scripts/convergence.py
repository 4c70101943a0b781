"""Normalized family coefficients over a grid of n; CSV on stdout.

    python scripts/convergence.py --n 1100 2200 4400 8800 > families.csv
"""
import argparse
import csv
import sys

from schurmin.cli import FAMILY_COLUMNS, family_rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[1100, 2200, 4400, 8800, 17600])
    ap.add_argument("--s", type=int, nargs="+", default=[0, 1, 2, 3, 4])
    ap.add_argument("--t", type=int, nargs="+", default=[3, 5, 7, 9, 11])
    args = ap.parse_args()
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(FAMILY_COLUMNS)
    writer.writerows(family_rows(args.n, args.s, args.t))


if __name__ == "__main__":
    main()
