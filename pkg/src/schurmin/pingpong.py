"""Ping-Pong recurrence: candidate local minima of G for a guessed k = sum z_i.

Cells are fixed in the order z_n, z_1, z_{n-1}, z_2, ... (and the middle
cell last when n is odd). Right-volley cells r > n/2 use a step function
of k - n + floor(r/2) + (z_1 + ... + z_{n-r}); left-volley cells m <= n/2
use 2k - n - 1/2 + floor(m/2) - (z_{n-m+1} + ... + z_n). Every threshold
band that does not force a value is a free binary choice, and the solver
branches on it.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .coloring import RColoring, to_runs
from .halfint import HalfInt

DEFAULT_BUDGET = 10**6
DEFAULT_SLACK = 12


class BudgetExhausted(RuntimeError):
    """Enumeration stopped before covering the whole search tree."""


def h_hat(y: HalfInt, choice: int) -> tuple[int, bool]:
    """0 if y > 1/2, 1 if y < 0, else ``choice``. Second item flags the free band."""
    d = HalfInt.of(y).doubled
    if d > 1:
        return 0, False
    if d < 0:
        return 1, False
    return int(choice), True


def h_tilde(y: HalfInt, choice: int) -> tuple[int, bool]:
    """0 if y > 1, 1 if y < -1, else ``choice``."""
    d = HalfInt.of(y).doubled
    if d > 2:
        return 0, False
    if d < -2:
        return 1, False
    return int(choice), True


@dataclass(frozen=True)
class VolleyParams:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"k must lie in [0, {self.n}], got {self.k}")

    @property
    def w(self) -> int:
        return 2 * self.k - self.n


@dataclass(frozen=True)
class Choice:
    position: int  # 1-based cell
    symbol: str  # "a" for the right/middle step function, "b" for the left one
    value: int
    argument: HalfInt


@dataclass(frozen=True)
class PingPongSolution:
    bits: tuple[int, ...]
    k_param: int
    choices: tuple[Choice, ...] = ()

    @property
    def k_actual(self) -> int:
        return sum(self.bits)

    @property
    def consistent(self) -> bool:
        return self.k_actual == self.k_param

    def coloring(self) -> RColoring:
        return RColoring.from_bits(self.bits)


def schedule(n: int) -> list[tuple[str, int]]:
    """Cells in solving order as (kind, index); kind is R, L or M."""
    steps = []
    for i in range(n // 2):
        steps.append(("R", n - i))
        steps.append(("L", i + 1))
    if n % 2:
        steps.append(("M", (n + 1) // 2))
    return steps


def _argument_doubled(kind: str, idx: int, n: int, k: int, left_prefix, right_suffix) -> int:
    # left_prefix[i] = z_1 + ... + z_i, right_suffix[m] = z_{n-m+1} + ... + z_n
    if kind == "R":
        return 2 * (k - n + idx // 2 + left_prefix[n - idx])
    if kind == "L":
        return 2 * (2 * k - n + idx // 2 - right_suffix[idx]) - 1
    return 2 * (k - n + (n + 1) // 4 + left_prefix[(n - 1) // 2])


def _step(kind: str, arg_doubled: int, choice: int) -> tuple[int, bool]:
    fn = h_tilde if kind == "L" else h_hat
    return fn(HalfInt(arg_doubled), choice)


class Enumeration:
    """Lazy depth-first enumeration of Ping-Pong solutions.

    Iterate to get solutions. After iteration, ``truncated`` tells whether
    the node budget ran out; ``nodes`` counts cell assignments made.
    """

    def __init__(self, params: VolleyParams, budget: int = DEFAULT_BUDGET, mode: str = "all"):
        if budget <= 0:
            raise ValueError("budget must be positive")
        if mode not in ("all", "consistent_only"):
            raise ValueError(f"unknown mode {mode!r}")
        self.params = params
        self.budget = budget
        self.mode = mode
        self.truncated = False
        self.finished = False
        self.nodes = 0

    def __iter__(self) -> Iterator[PingPongSolution]:
        n, k = self.params.n, self.params.k
        steps = schedule(n)
        depth_max = len(steps)
        consistent_only = self.mode == "consistent_only"
        z = [0] * (n + 1)
        lp = [0] * (n + 1)
        rs = [0] * (n + 1)
        # per-depth: candidate bits, next candidate, argument, free flag
        cand: list = [None] * depth_max
        nxt = [0] * depth_max
        args = [0] * depth_max
        free = [False] * depth_max

        def open_depth(d):
            kind, idx = steps[d]
            a = _argument_doubled(kind, idx, n, k, lp, rs)
            forced, ambiguous = _step(kind, a, 0)
            args[d] = a
            free[d] = ambiguous
            cand[d] = (0, 1) if ambiguous else (forced,)
            nxt[d] = 0

        if depth_max == 0:
            self.finished = True
            return
        open_depth(0)
        depth = 0
        while depth >= 0:
            if depth == depth_max:
                yield self._emit(steps, z, args, free, k)
                depth -= 1
                continue
            if nxt[depth] >= len(cand[depth]):
                depth -= 1
                continue
            bit = cand[depth][nxt[depth]]
            nxt[depth] += 1
            self.nodes += 1
            if self.nodes > self.budget:
                self.truncated = True
                return
            kind, idx = steps[depth]
            z[idx] = bit
            n_left = (depth + 1) // 2
            n_right = depth // 2 + 1 if kind != "M" else n // 2
            if kind == "L":
                lp[idx] = lp[idx - 1] + bit
            elif kind == "R":
                m = n - idx + 1
                rs[m] = rs[m - 1] + bit
            if consistent_only:
                ones = lp[n_left] + rs[n_right] + (bit if kind == "M" else 0)
                remaining = depth_max - depth - 1
                if ones > k or ones + remaining < k:
                    continue
            depth += 1
            if depth < depth_max:
                open_depth(depth)
        self.finished = True

    def _emit(self, steps, z, args, free, k) -> PingPongSolution:
        trace = tuple(
            Choice(idx, "b" if kind == "L" else "a", z[idx], HalfInt(args[d]))
            for d, (kind, idx) in enumerate(steps)
            if free[d]
        )
        return PingPongSolution(tuple(z[1:]), k, trace)

    def solutions(self) -> list[PingPongSolution]:
        return list(self)


def solve(params: VolleyParams, budget: int = DEFAULT_BUDGET, mode: str = "all") -> Enumeration:
    return Enumeration(params, budget, mode)


def sample(params: VolleyParams, samples: int, seed: int = 0) -> list[PingPongSolution]:
    """Monte-Carlo: resolve every free choice by a fair coin, no backtracking."""
    rng = np.random.default_rng(seed)
    n, k = params.n, params.k
    steps = schedule(n)
    out = []
    for _ in range(samples):
        z = [0] * (n + 1)
        lp = [0] * (n + 1)
        rs = [0] * (n + 1)
        trace = []
        for kind, idx in steps:
            a = _argument_doubled(kind, idx, n, k, lp, rs)
            bit, ambiguous = _step(kind, a, int(rng.integers(2)))
            z[idx] = bit
            if ambiguous:
                trace.append(Choice(idx, "b" if kind == "L" else "a", bit, HalfInt(a)))
            if kind == "L":
                lp[idx] = lp[idx - 1] + bit
            elif kind == "R":
                m = n - idx + 1
                rs[m] = rs[m - 1] + bit
        out.append(PingPongSolution(tuple(z[1:]), k, tuple(trace)))
    return out


def replay(solution: PingPongSolution) -> bool:
    """Recompute each cell from its volley and the recorded choices."""
    bits = solution.bits
    n, k = len(bits), solution.k_param
    recorded = {ch.position: ch.value for ch in solution.choices}
    lp = [0] * (n + 1)
    rs = [0] * (n + 1)
    used = set()
    for kind, idx in schedule(n):
        a = _argument_doubled(kind, idx, n, k, lp, rs)
        bit, ambiguous = _step(kind, a, recorded.get(idx, 0))
        if ambiguous:
            if idx not in recorded:
                return False
            used.add(idx)
        if bit != bits[idx - 1]:
            return False
        if kind == "L":
            lp[idx] = lp[idx - 1] + bit
        elif kind == "R":
            m = n - idx + 1
            rs[m] = rs[m - 1] + bit
    return used == set(recorded)


def satisfies_volleys(z: Sequence[int], k: int) -> bool:
    """True iff some choice of the free values reproduces ``z`` cell by cell."""
    bits = [int(b) for b in z]
    n = len(bits)
    lp = [0] * (n + 1)
    rs = [0] * (n + 1)
    for kind, idx in schedule(n):
        a = _argument_doubled(kind, idx, n, k, lp, rs)
        bit = bits[idx - 1]
        forced, ambiguous = _step(kind, a, bit)
        if forced != bit:
            return False
        if kind == "L":
            lp[idx] = lp[idx - 1] + bit
        elif kind == "R":
            m = n - idx + 1
            rs[m] = rs[m - 1] + bit
    return True


# ---------------------------------------------------------------------------
# Case I-IV templates


@dataclass(frozen=True)
class Run:
    color: int
    lo: int
    hi: int


@dataclass(frozen=True)
class Free:
    """The Q block: any bits, at most ``max_ones`` ones."""

    max_ones: int


@dataclass(frozen=True)
class Alternating:
    """Zero or more maximal-ish runs alternating in color, starting with ``start``."""

    start: int
    lo: int
    hi: int


@dataclass(frozen=True)
class CaseLabel:
    case: str  # I, II, III, IV or Unknown
    s: float | None  # math.inf for Case IV, None when undefined
    w: int
    slack: float
    detail: str = ""

    def as_dict(self) -> dict:
        s = "inf" if self.s == math.inf else self.s
        return {"case": self.case, "s": s, "w": self.w, "slack": self.slack, "detail": self.detail}

    @property
    def short(self) -> str:
        if self.case in ("Unknown", "IV") or self.s is None:
            return self.case
        return f"{self.case}(s={self.s})"


def s_index(n: int, w: int) -> int:
    """The s >= 0 with n/(12s+14) <= w < n/(12s+2), for 0 < 2w < n."""
    if not 0 < 2 * w < n:
        raise ValueError(f"s is defined for 0 < w < n/2, got w={w}, n={n}")
    return max(0, -(-(n - 14 * w) // (12 * w)))


def _exact(color: int, length: int) -> Run:
    return Run(color, length, length)


def _leading_blocks(pair: list, s: int) -> list:
    """(ab)^{s/2}: s blocks of abab...; for odd s that is (ab)^{(s-1)/2} a."""
    return [pair[i % 2] for i in range(s)]


def _trailing_blocks(pair: list, s: int) -> list:
    """The last s blocks of ...abab, so an odd s starts with b."""
    return [pair[(i + s) % 2] for i in range(s)]


def case_template(n: int, w: int) -> tuple[str, float | None, list]:
    """Template for the canonical (k >= n/2) side: (case, s, segments)."""
    if w == 0:
        return "IV", math.inf, [Run(0, 0, 2), Alternating(1, 3, 11), Free(22), Alternating(0, 3, 11)]
    if 2 * w >= n:
        return "I", None, [Run(0, n, n)]
    s = s_index(n, w)
    if n <= 8 * w:  # n/8 <= w < n/2
        half = n // 2
        return "I", 0, [_exact(0, half), _exact(1, n - half - w), _exact(0, w)]
    if n <= w * (12 * s + 8):
        if s == 1:
            half = n // 2
            segs = [_exact(0, 4 * w), _exact(1, half - 4 * w), _exact(0, n - half - 7 * w), _exact(1, 6 * w), _exact(0, w)]
            return "II", 1, segs
        q_ones = 12 * w
        case = "II"
    else:
        if s == 0:
            return "III", 0, [_exact(0, 4 * w), _exact(1, n - 5 * w), _exact(0, w)]
        q_ones = 6 * w
        case = "III"
    six = 6 * w
    segs = (
        [_exact(0, 4 * w)]
        + _leading_blocks([_exact(1, six), _exact(0, six)], s)
        + [Free(q_ones)]
        + _trailing_blocks([_exact(0, six), _exact(1, six)], s)
        + [_exact(0, w)]
    )
    return case, s, segs


def _run_dev(length: int, lo: int, hi: int) -> int:
    return max(0, lo - length, length - hi)


def match_template(bits: Sequence[int], segments: list, slack_bound: int) -> float:
    """Smallest achievable max run-length deviation, or inf if no alignment fits."""
    n = len(bits)
    inf = math.inf
    # same[p]: length of the constant stretch starting at p
    same = [0] * (n + 1)
    for p in range(n - 1, -1, -1):
        same[p] = same[p + 1] + 1 if p + 1 < n and bits[p + 1] == bits[p] else 1
    ones = [0] * (n + 1)
    for p, b in enumerate(bits):
        ones[p + 1] = ones[p] + b
    frontier = {0: 0}
    for seg in segments:
        new: dict[int, float] = {}
        if isinstance(seg, Run):
            lo = max(0, seg.lo - slack_bound)
            hi = seg.hi + slack_bound
            for p, v in frontier.items():
                avail = same[p] if p < n and bits[p] == seg.color else 0
                for length in range(lo, min(hi, avail) + 1):
                    cost = max(v, _run_dev(length, seg.lo, seg.hi))
                    q = p + length
                    if cost < new.get(q, inf):
                        new[q] = cost
        elif isinstance(seg, Free):
            best = [inf] * (n + 1)
            parent = list(range(n + 2))  # next unpainted slot

            def find(i):
                while parent[i] != i:
                    parent[i] = parent[parent[i]]
                    i = parent[i]
                return i

            for p, v in sorted(frontier.items(), key=lambda kv: kv[1]):
                limit = ones[p] + seg.max_ones
                # largest q with ones[q] <= limit
                qmax = int(np.searchsorted(ones, limit, side="right")) - 1
                q = find(p)
                while q <= qmax:
                    best[q] = v
                    parent[q] = q + 1
                    q = find(q + 1)
            new = {q: v for q, v in enumerate(best) if v < inf}
        else:
            lo = max(1, seg.lo - slack_bound)
            hi = seg.hi + slack_bound
            state = [[inf] * (n + 1), [inf] * (n + 1)]
            for p, v in frontier.items():
                state[seg.start][p] = min(state[seg.start][p], v)
            for p in range(n + 1):
                for color in (0, 1):
                    v = state[color][p]
                    if v == inf:
                        continue
                    if v < new.get(p, inf):
                        new[p] = v
                    if p >= n or bits[p] != color:
                        continue
                    for length in range(lo, min(hi, same[p]) + 1):
                        cost = max(v, _run_dev(length, seg.lo, seg.hi))
                        if cost <= slack_bound and cost < state[1 - color][p + length]:
                            state[1 - color][p + length] = cost
        frontier = {p: v for p, v in new.items() if v <= slack_bound}
        if not frontier:
            return inf
    return frontier.get(n, inf)


def classify(z: Sequence[int], slack_bound: int = DEFAULT_SLACK, k: int | None = None) -> CaseLabel:
    """Match ``z`` against the Case I-IV templates.

    w = 2k - n with k the number of ones unless a recurrence parameter
    ``k`` is given. The k < n/2 side is mapped over by complement.
    """
    bits = [int(b) for b in z]
    n = len(bits)
    if k is None:
        k = sum(bits)
    if 2 * k < n:
        bits = [1 - b for b in bits]
        k = n - k
    w = 2 * k - n
    case, s, segments = case_template(n, w)
    if case == "I" and s is None:
        # w >= n/2: the recurrence only admits the constant coloring
        if len(set(bits)) <= 1:
            return CaseLabel("I", None, w, 0, "degenerate: constant coloring")
        return CaseLabel("Unknown", None, w, math.inf, "w >= n/2 but not constant")
    dev = match_template(bits, segments, slack_bound)
    if dev <= slack_bound:
        return CaseLabel(case, s, w, dev)
    runs = to_runs(bits)
    head = " ".join(f"{c}^{l}" for c, l in runs[:8])
    return CaseLabel("Unknown", s, w, dev, f"expected case {case}; runs {head}{' ...' if len(runs) > 8 else ''}")


# ---------------------------------------------------------------------------
# survey over k


@dataclass
class SurveyRow:
    n: int
    k: int
    consistent_count: int
    truncated: bool
    case_histogram: Counter = field(default_factory=Counter)
    representative: tuple[int, ...] | None = None
    representative_label: CaseLabel | None = None

    @property
    def w(self) -> int:
        return 2 * self.k - self.n

    def histogram_text(self) -> str:
        return ";".join(f"{key}:{cnt}" for key, cnt in sorted(self.case_histogram.items()))

    def csv_row(self) -> list:
        return [self.n, self.k, self.w, self.consistent_count, int(self.truncated), self.histogram_text()]


SURVEY_COLUMNS = ["n", "k", "w", "consistent_count", "truncated", "case_histogram"]


def _representative_key(label: CaseLabel):
    # prefer matched templates with the least slack
    return (label.case == "Unknown", label.slack)


def survey_w(
    n: int,
    budget: int = DEFAULT_BUDGET,
    mode: str = "exhaustive",
    samples: int = 200,
    seed: int = 0,
    slack_bound: int = DEFAULT_SLACK,
    classify_limit: int = 200,
    k_values: Sequence[int] | None = None,
) -> list[SurveyRow]:
    """For each k in [ceil(n/2), n], count consistent solutions and classify some.

    ``mode="exhaustive"`` runs the budgeted DFS per k; ``mode="sample"``
    draws random choice sequences and keeps the consistent ones.
    """
    if k_values is None:
        k_values = range((n + 1) // 2, n + 1)
    rows = []
    for k in k_values:
        params = VolleyParams(n, k)
        if mode == "exhaustive":
            run = solve(params, budget, "consistent_only")
            found = {}
            for sol in run:
                found.setdefault(sol.bits, sol)
            truncated = run.truncated
        elif mode == "sample":
            found = {}
            for sol in sample(params, samples, seed + k):
                if sol.consistent:
                    found.setdefault(sol.bits, sol)
            truncated = False
        else:
            raise ValueError(f"unknown survey mode {mode!r}")
        row = SurveyRow(n, k, len(found), truncated)
        best = None
        for bits in list(found)[:classify_limit]:
            label = classify(bits, slack_bound)
            row.case_histogram[label.short] += 1
            if best is None or _representative_key(label) < _representative_key(best[1]):
                best = (bits, label)
        if best is not None:
            row.representative, row.representative_label = best
        rows.append(row)
    return rows
