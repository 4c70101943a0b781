"""Which imbalances w = 2k - n admit consistent Ping-Pong solutions, for several n."""
import argparse
import csv
import sys

from schurmin.coloring import RColoring, format_coloring
from schurmin.pingpong import SURVEY_COLUMNS, survey_w


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[44, 88, 132])
    ap.add_argument("--budget", type=int, default=20000)
    ap.add_argument("--sample", type=int, default=0, help="Monte-Carlo draws per k instead of DFS")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(SURVEY_COLUMNS + ["representative", "label"])
    for n in args.n:
        if args.sample:
            rows = survey_w(n, mode="sample", samples=args.sample, seed=args.seed)
        else:
            rows = survey_w(n, budget=args.budget)
        for row in rows:
            if not row.consistent_count and not row.truncated:
                continue
            rep = format_coloring(RColoring.from_bits(row.representative), "runs") if row.representative else ""
            label = row.representative_label.short if row.representative_label else ""
            writer.writerow(row.csv_row() + [rep, label])


if __name__ == "__main__":
    main()
