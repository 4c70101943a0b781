"""Command-line entry point: ``schurmin <subcommand> ...``.

JSON on stdout by default (one object per result, each carrying
``schema``); ``--csv`` or ``--format csv`` switches to tables.
Exit codes: 0 ok, 2 invalid input, 3 truncated enumeration.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

import numpy as np

from . import calculus, coloring, counting, pingpong, search

SCHEMA_VERSION = 1
DEFAULT_SEED = 0

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_TRUNCATED = 3


class Output:
    def __init__(self, fmt: str, path: str | None):
        self.fmt = fmt
        self.stream = open(path, "w", newline="") if path else sys.stdout

    def record(self, kind: str, payload: dict):
        if self.fmt == "json":
            self.stream.write(json.dumps({"schema": SCHEMA_VERSION, "kind": kind, **payload}) + "\n")
        elif self.fmt == "text":
            self.stream.write(f"[{kind}] " + " ".join(f"{k}={v}" for k, v in payload.items()) + "\n")
        else:
            self.table(list(payload), [list(payload.values())])

    def table(self, header: list, rows: list):
        if self.fmt == "csv":
            writer = csv.writer(self.stream, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
        else:
            for row in rows:
                self.record("row", dict(zip(header, row)))

    def close(self):
        if self.stream is not sys.stdout:
            self.stream.close()


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.replace(",", " ").split()]


def _add_output(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--csv", action="store_true", help="shorthand for --format csv")
    p.add_argument("--output", "-o", help="write to this file instead of stdout")
    p.add_argument("--threads", type=int, default=1, help="worker bound; results do not depend on it")


def _add_coloring(p: argparse.ArgumentParser, need_n: bool = True):
    p.add_argument("--coloring", help='digit string "0011..." or run expression "0^4 1^6 0^1"')
    p.add_argument("--family", choices=["zs", "zinf", "extension"])
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--r", type=int, default=2)


def _coloring_from(args) -> coloring.RColoring:
    if args.coloring is not None:
        return coloring.parse_coloring(args.coloring)
    if args.family is None or args.n is None:
        raise coloring.InvalidParameter("give --coloring, or --family with --n")
    kind = {"zs": "Zs", "zinf": "Zinf", "extension": "Extension"}[args.family]
    return coloring.FamilyParams(kind, args.n, s=args.s, t=args.t, r=args.r).build()


def cmd_count(args, out: Output) -> int:
    c = _coloring_from(args)
    fn = counting.count_naive if args.naive else counting.count_fast
    tc = fn(c, include_equal=args.include_equal)
    payload = tc.as_dict()
    if c.r == 2 and c.n:
        payload["ratio_22F_n2"] = 22 * tc.total / c.n**2
    out.record("count", payload)
    return EXIT_OK


def family_rows(n_list, s_list, t_list) -> list[list]:
    """(family, n, param, F, normalized coefficient) rows; coefficient -> 1 asymptotically."""
    rows = []
    for n in n_list:
        for s in s_list:
            if n < 12 * s + 11:
                continue
            F = counting.eval_F(coloring.make_zs(s, n))
            coeff = 16 * (12 * s + 11) * F / ((12 * s + 8) * n * n)
            rows.append(["Zs", n, s, F, coeff])
        for t in t_list:
            if n < 2 * t:
                continue
            F = counting.eval_F(coloring.make_zinf(t, n))
            rows.append(["Zinf", n, t, F, 16 * F / (n * n)])
    return rows


FAMILY_COLUMNS = ["family", "n", "param", "F", "coefficient"]


def cmd_families(args, out: Output) -> int:
    rows = family_rows(_int_list(args.n), _int_list(args.s), _int_list(args.t))
    out.table(FAMILY_COLUMNS, rows)
    return EXIT_OK


def cmd_grad(args, out: Output) -> int:
    c = _coloring_from(args)
    indices = [args.index] if args.index else range(1, c.n + 1)
    rows = [calculus.delta_report(c, r).as_dict() for r in indices]
    out.table(list(rows[0]) if rows else [], [list(r.values()) for r in rows])
    return EXIT_OK if all(r["agree"] for r in rows) else EXIT_INVALID


def cmd_certify(args, out: Output) -> int:
    c = _coloring_from(args)
    cert = calculus.certify_local_min(c, args.objective)
    out.record("certificate", cert.as_dict())
    return EXIT_OK


def cmd_pingpong(args, out: Output) -> int:
    n = args.n
    if args.survey:
        if args.sample:
            rows = pingpong.survey_w(n, mode="sample", samples=args.sample, seed=args.seed)
        else:
            rows = pingpong.survey_w(n, budget=args.budget)
        out.table(pingpong.SURVEY_COLUMNS, [r.csv_row() for r in rows])
        return EXIT_TRUNCATED if any(r.truncated for r in rows) else EXIT_OK
    ks = [args.k] if args.k is not None else list(range(args.k_min, (args.k_max if args.k_max is not None else n) + 1))
    truncated = False
    header = ["n", "k", "w", "consistent", "solution", "case", "free_choices"]
    rows = []
    for k in ks:
        params = pingpong.VolleyParams(n, k)
        if args.sample:
            sols = [s for s in pingpong.sample(params, args.sample, args.seed) if s.consistent or args.mode == "all"]
            sols = list({s.bits: s for s in sols}.values())
        else:
            run = pingpong.solve(params, args.budget, args.mode)
            sols = run.solutions()
            truncated |= run.truncated
        for sol in sols:
            label = pingpong.classify(sol.bits, k=k)
            rows.append([
                n, k, params.w, int(sol.consistent),
                coloring.format_coloring(sol.coloring(), "runs"), label.short, len(sol.choices),
            ])
    out.table(header, rows)
    if truncated:
        print(f"warning: enumeration truncated at budget {args.budget}", file=sys.stderr)
        return EXIT_TRUNCATED
    return EXIT_OK


def cmd_brute(args, out: Output) -> int:
    if args.local:
        rep = search.brute_local_minima(args.n, args.local, cap=args.cap or search.LOCAL_CAP)
    else:
        rep = search.brute_global_min(args.n, cap=args.cap or search.GLOBAL_CAP)
    out.record("brute", rep.as_dict())
    return EXIT_OK


def cmd_descend(args, out: Output) -> int:
    if args.random:
        if args.n is None:
            raise coloring.InvalidParameter("--random needs --n")
        rng = np.random.default_rng(args.seed)
        start = coloring.RColoring.from_bits(rng.integers(0, 2, args.n))
    else:
        start = _coloring_from(args)
    res = search.descend(start, args.rule)
    out.record("descend", res.as_dict())
    return EXIT_OK


def cmd_multistart(args, out: Output) -> int:
    res = search.multistart(args.n, args.restarts, args.seed, args.rule)
    out.record("multistart", res.as_dict())
    return EXIT_OK


def extension_report(r: int, n: int) -> dict:
    tc = counting.count_fast(coloring.make_extension(r, n))
    bound = Fraction(n * n, 2 ** (2 * r - 3) * 11)
    return {
        "r": r,
        "n": n,
        "total": tc.total,
        "per_color": list(tc.per_color),
        "bound_n2": float(bound),
        "C": float((tc.total - bound) / n),
    }


def cmd_extend(args, out: Output) -> int:
    out.record("extend", extension_report(args.r, args.n))
    return EXIT_OK


def cmd_bench(args, out: Output) -> int:
    rng = np.random.default_rng(args.seed)
    timings = {}
    big = coloring.RColoring.from_bits(rng.integers(0, 2, args.fast_n))
    t0 = time.perf_counter()
    counting.count_fast(big)
    timings["count_fast_s"] = time.perf_counter() - t0
    mid = coloring.RColoring.from_bits(rng.integers(0, 2, args.naive_n))
    t0 = time.perf_counter()
    counting.count_naive(mid)
    timings["count_naive_s"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    search.brute_global_min(args.brute_n)
    timings["brute_global_min_s"] = time.perf_counter() - t0
    out.record("bench", {"fast_n": args.fast_n, "naive_n": args.naive_n, "brute_n": args.brute_n, **timings})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurmin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count monochromatic Schur triples")
    _add_coloring(p)
    p.add_argument("--naive", action="store_true")
    p.add_argument("--include-equal", action="store_true", help="also count {i, i, 2i}")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("families", help="F and normalized coefficients of Z_s and Z_inf^t")
    p.add_argument("--n", default="1100", help="comma-separated lengths")
    p.add_argument("--s", default="0,1,2,3,4")
    p.add_argument("--t", default="3,7,11")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("grad", help="flip deltas and closed forms of F and G")
    _add_coloring(p)
    p.add_argument("--index", type=int, help="single 1-based index (default: all)")
    p.set_defaults(func=cmd_grad)

    p = sub.add_parser("certify", help="check that every partial derivative is <= 0")
    _add_coloring(p)
    p.add_argument("--objective", choices=["F", "G"], default="F")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("pingpong", help="solve the volley recurrence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--k-min", type=int, default=0)
    p.add_argument("--k-max", type=int)
    p.add_argument("--survey", action="store_true", help="consistent solutions for every k >= n/2")
    p.add_argument("--budget", type=int, default=pingpong.DEFAULT_BUDGET)
    p.add_argument("--mode", choices=["all", "consistent_only"], default="consistent_only")
    p.add_argument("--sample", type=int, default=0, help="Monte-Carlo draws instead of DFS")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_pingpong)

    p = sub.add_parser("brute", help="exhaustive minimum (or local minima) for small n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--local", choices=["F", "G"], help="list all local minima of this objective")
    p.add_argument("--cap", type=int)
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("descend", help="bit-flip descent on F")
    _add_coloring(p)
    p.add_argument("--random", action="store_true", help="uniform random start of length --n")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--rule", choices=["best_improvement", "first_improvement"], default="best_improvement")
    p.set_defaults(func=cmd_descend)

    p = sub.add_parser("multistart", help="best descent over seeded random starts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--restarts", type=int, default=200)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--rule", choices=["best_improvement", "first_improvement"], default="best_improvement")
    p.set_defaults(func=cmd_multistart)

    p = sub.add_parser("extend", help="r-coloring construction against n^2/(2^(2r-3) 11)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("bench", help="timings of the counters and the exhaustive search")
    p.add_argument("--fast-n", type=int, default=10**6)
    p.add_argument("--naive-n", type=int, default=2 * 10**4)
    p.add_argument("--brute-n", type=int, default=24)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_bench)

    for name, p in sub.choices.items():
        _add_output(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    fmt = "csv" if args.csv else args.format
    out = Output(fmt, args.output)
    try:
        return args.func(args, out)
    except (coloring.ColoringParseError, coloring.InvalidParameter, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    finally:
        out.close()


if __name__ == "__main__":
    sys.exit(main())
