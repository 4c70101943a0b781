"""Exact minima of F for small n next to the best Z_s value and n^2/22."""
import argparse

from schurmin.coloring import format_coloring, make_zs
from schurmin.counting import eval_F
from schurmin.search import brute_global_min


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=24)
    args = ap.parse_args()
    print(f"{'n':>3} {'min F':>6} {'Z_s best':>8} {'n^2/22':>8}  witness")
    for n in range(1, args.max_n + 1):
        rep = brute_global_min(n)
        fam = min((eval_F(make_zs(s, n)) for s in range((n - 11) // 12 + 1)), default=None) if n >= 11 else None
        witness = format_coloring(rep.argmins[0], "runs") if rep.argmins else ""
        print(f"{n:>3} {rep.min_value:>6} {fam if fam is not None else '-':>8} {n * n / 22:>8.2f}  {witness}")


if __name__ == "__main__":
    main()
