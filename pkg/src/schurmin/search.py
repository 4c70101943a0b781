"""Bit-flip descent on F and exhaustive ground truth for small n."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numba
import numpy as np

from .calculus import all_partials_F
from .coloring import InvalidParameter, RColoring, format_coloring
from .counting import _require_binary, eval_F, max_pairs

GLOBAL_CAP = 26
LOCAL_CAP = 20
ARGMIN_CAP = 64


@dataclass
class SearchResult:
    best: RColoring
    value: int
    iterations: int
    start: RColoring
    trajectory: list[tuple[int, int]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "n": self.best.n,
            "value": self.value,
            "iterations": self.iterations,
            "best": format_coloring(self.best, "runs"),
            "start": format_coloring(self.start, "runs"),
            "trajectory": [list(step) for step in self.trajectory],
        }


@dataclass
class BruteReport:
    n: int
    min_value: int
    argmin_count: int
    argmins: list[RColoring] = field(default_factory=list)
    local_minima: list[RColoring] | None = None
    objective: str = "F"

    def as_dict(self) -> dict:
        out = {
            "n": self.n,
            "min_value": self.min_value,
            "argmin_count": self.argmin_count,
            "argmins": [format_coloring(c, "runs") for c in self.argmins],
        }
        if self.local_minima is not None:
            out["objective"] = self.objective
            out["local_minima"] = [format_coloring(c, "runs") for c in self.local_minima]
        return out


def descend(start: RColoring, rule: str = "best_improvement") -> SearchResult:
    """Flip bits with a positive derivative until none is left.

    ``best_improvement`` takes the largest dF_r (smallest r on ties);
    ``first_improvement`` takes the smallest r with dF_r > 0.
    """
    _require_binary(start)
    if rule not in ("best_improvement", "first_improvement"):
        raise ValueError(f"unknown rule {rule!r}")
    x = start.array().copy()
    value = eval_F(start)
    trajectory = []
    while x.size:
        d = all_partials_F(x)
        if rule == "best_improvement":
            idx = int(np.argmax(d))
            if d[idx] <= 0:
                break
        else:
            pos = np.flatnonzero(d > 0)
            if not pos.size:
                break
            idx = int(pos[0])
        value -= int(d[idx])
        x[idx] ^= 1
        trajectory.append((idx + 1, value))
    best = RColoring.from_bits(x)
    return SearchResult(best, value, len(trajectory), start, trajectory)


def multistart(
    n: int, restarts: int, seed: int = 0, rule: str = "best_improvement"
) -> SearchResult:
    """Best descent over uniform random starts drawn from a seeded generator."""
    rng = np.random.default_rng(seed)
    best = None
    for _ in range(restarts):
        start = RColoring.from_bits(rng.integers(0, 2, n))
        res = descend(start, rule)
        if best is None or res.value < best.value:
            best = res
    if best is None:
        raise ValueError("restarts must be positive")
    return best


# ---------------------------------------------------------------------------
# exhaustive search


def gray_walk(n: int) -> Iterator[tuple[int, int]]:
    """Yield (code, flipped index) over all 2^n codes; index is 1-based, 0 for the start."""
    code = 0
    yield code, 0
    for i in range(1, 1 << n):
        bit = (i & -i).bit_length() - 1
        code ^= 1 << bit
        yield code, bit + 1


@numba.njit(cache=True)
def _popcount(v):
    v = v - ((v >> 1) & 0x55555555)
    v = (v & 0x33333333) + ((v >> 2) & 0x33333333)
    return ((((v + (v >> 4)) & 0x0F0F0F0F) * 0x01010101) & 0xFFFFFFFF) >> 24


@numba.njit(cache=True)
def _gray_kernel(n, start_value, cap):
    argmins = np.zeros(cap, dtype=np.int64)
    mask = np.int64(0)
    value = start_value
    best = value
    count = 1
    argmins[0] = 0
    visited = 1
    code_sum = np.int64(0)
    code_xor = np.int64(0)
    total = np.int64(1) << n
    for i in range(1, total):
        bit = 0
        t = i
        while (t & 1) == 0:
            t >>= 1
            bit += 1
        r = bit + 1
        # closed-form dF_r at the current mask
        xr = (mask >> bit) & 1
        s_all = _popcount(mask)
        low = mask & ((np.int64(1) << (n - r)) - 1)
        inner = s_all + _popcount(low) - (n - r // 2) + 1 - xr
        if r % 2 == 0:
            inner -= (mask >> (r // 2 - 1)) & 1
        if 2 * r <= n:
            inner -= xr + ((mask >> (2 * r - 1)) & 1) - 1
        delta = inner if xr == 1 else -inner
        value -= delta
        mask ^= np.int64(1) << bit
        visited += 1
        code_sum += mask
        code_xor ^= mask
        if value < best:
            best = value
            count = 1
            argmins[0] = mask
        elif value == best:
            if count < cap:
                argmins[count] = mask
            count += 1
    return best, count, argmins, visited, code_sum, code_xor


def _refuse(n: int, cap: int, what: str):
    if n > cap:
        raise InvalidParameter(
            f"{what} refuses n={n} above cap {cap}: 2^{n} = {2**n:.3e} states "
            f"(about {2**n / 5e7:.0f} s compiled, plus memory for tables)"
        )


def brute_global_min(n: int, cap: int = GLOBAL_CAP, argmin_cap: int = ARGMIN_CAP) -> BruteReport:
    """Exact min of F over {0,1}^n by a Gray-code walk with closed-form updates."""
    if n < 0:
        raise InvalidParameter("n must be nonnegative")
    _refuse(n, min(cap, 31), "brute_global_min")
    best, count, argmins, _, _, _ = _gray_kernel(n, max_pairs(n), argmin_cap)
    stored = [RColoring.from_code(int(c), n) for c in argmins[: min(count, argmin_cap)]]
    return BruteReport(n, int(best), int(count), stored)


def gray_audit(n: int) -> tuple[int, int, int]:
    """(states visited, sum of codes, xor of codes) from the compiled walk."""
    _, _, _, visited, code_sum, code_xor = _gray_kernel(n, max_pairs(n), 1)
    return int(visited), int(code_sum), int(code_xor)


def objective_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """F and 2G at every code in [0, 2^n), by direct summation over triples."""
    codes = np.arange(1 << n, dtype=np.int64)
    bits = [((codes >> i) & 1).astype(np.int8) for i in range(n)]
    F = np.zeros(1 << n, dtype=np.int64)
    for i in range(1, n // 2 + 1):
        for j in range(i + 1, n - i + 1):
            a, b, c = bits[i - 1], bits[j - 1], bits[i + j - 1]
            F += ((a == b) & (b == c)).astype(np.int64)
    G2 = 2 * F
    for i in range(1, n // 2 + 1):
        G2 += 2 * bits[i - 1] * (bits[2 * i - 1].astype(np.int64) - 1)
    for i in range(n):
        G2 -= bits[i]
    return F, G2


def brute_local_minima(n: int, objective: str = "F", cap: int = LOCAL_CAP) -> BruteReport:
    """Every point with f(x) - f(x flipped at r) <= 0 for all r, via full tables."""
    if objective not in ("F", "G"):
        raise ValueError(f"objective must be F or G, got {objective!r}")
    _refuse(n, cap, "brute_local_minima")
    F, G2 = objective_tables(n)
    table = F if objective == "F" else G2
    codes = np.arange(1 << n, dtype=np.int64)
    is_min = np.ones(1 << n, dtype=bool)
    for bit in range(n):
        is_min &= table - table[codes ^ (1 << bit)] <= 0
    minima = [RColoring.from_code(int(c), n) for c in np.flatnonzero(is_min)]
    fmin = int(F.min())
    arg = np.flatnonzero(F == fmin)
    return BruteReport(
        n, fmin, int(arg.size), [RColoring.from_code(int(c), n) for c in arg[:ARGMIN_CAP]], minima, objective
    )
