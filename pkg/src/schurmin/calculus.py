"""Discrete partial derivatives of F and G.

``flip_delta`` is the oracle: two full evaluations. The closed forms use
prefix sums and agree with it exactly. Notation: S = sum x_i,
P(m) = x_1 + ... + x_m, A_r = S + P(n-r) - (n - floor(r/2)).

    dF_r = (2x_r - 1) * (A_r + 1 - x_r - [r even] x_{r/2} - [2r <= n](x_r + x_{2r} - 1))
    dG_r = (2x_r - 1) * (A_r - [2r <= n]/2) - [2r <= n]/2 - 1/2

The published form of dF_r keeps x_{r/2} only when 2r <= n; the term is
needed for every even r.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import RColoring
from .counting import _require_binary, eval_F, eval_G
from .halfint import HalfInt

OBJECTIVES = ("F", "G")


def _check_index(c: RColoring, r: int):
    if not 1 <= r <= c.n:
        raise IndexError(f"index {r} outside [1, {c.n}]")


def _evaluate(c: RColoring, objective: str):
    if objective == "F":
        return eval_F(c)
    if objective == "G":
        return eval_G(c)
    raise ValueError(f"objective must be F or G, got {objective!r}")


def flip_delta(c: RColoring, r: int, objective: str = "F"):
    """f(x) - f(x with bit r flipped), by direct evaluation."""
    _require_binary(c)
    _check_index(c, r)
    return _evaluate(c, objective) - _evaluate(c.flip(r), objective)


def prefix_sums(c: RColoring) -> list[int]:
    """P[m] = x_1 + ... + x_m, P[0] = 0."""
    out = [0]
    for b in c.colors:
        out.append(out[-1] + b)
    return out


def _bit(c: RColoring, i: int) -> int:
    return c.colors[i - 1] if 1 <= i <= c.n else 0


def _a_term(c: RColoring, r: int, prefix: list[int]) -> int:
    return prefix[c.n] + prefix[c.n - r] - (c.n - r // 2)


def closed_partial_F(c: RColoring, r: int, prefix: list[int] | None = None) -> int:
    _require_binary(c)
    _check_index(c, r)
    if prefix is None:
        prefix = prefix_sums(c)
    xr = c.colors[r - 1]
    inner = _a_term(c, r, prefix) + 1 - xr
    if r % 2 == 0:
        inner -= _bit(c, r // 2)
    if 2 * r <= c.n:
        inner -= xr + _bit(c, 2 * r) - 1
    return inner if xr else -inner


def closed_partial_G(c: RColoring, r: int, prefix: list[int] | None = None) -> HalfInt:
    _require_binary(c)
    _check_index(c, r)
    if prefix is None:
        prefix = prefix_sums(c)
    sign = 1 if c.colors[r - 1] else -1
    low = 1 if 2 * r <= c.n else 0
    # doubled: sign*(2A - low) - low - 1
    return HalfInt(sign * (2 * _a_term(c, r, prefix) - low) - low - 1)


def all_partials_F(x: np.ndarray) -> np.ndarray:
    """Vector of dF_r for r = 1..n over a 0/1 array (entry r-1)."""
    x = np.asarray(x, dtype=np.int64)
    n = x.size
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    P = np.concatenate(([0], np.cumsum(x)))
    r = np.arange(1, n + 1)
    inner = P[n] + P[n - r] - (n - r // 2) + 1 - x
    even = r % 2 == 0
    inner[even] -= x[r[even] // 2 - 1]
    low = 2 * r <= n
    inner[low] -= x[low] + x[2 * r[low] - 1] - 1
    return np.where(x == 1, inner, -inner)


def all_partials_G_doubled(x: np.ndarray) -> np.ndarray:
    """Vector of 2*dG_r for r = 1..n."""
    x = np.asarray(x, dtype=np.int64)
    n = x.size
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    P = np.concatenate(([0], np.cumsum(x)))
    r = np.arange(1, n + 1)
    a = P[n] + P[n - r] - (n - r // 2)
    low = (2 * r <= n).astype(np.int64)
    sign = 2 * x - 1
    return sign * (2 * a - low) - low - 1


@dataclass(frozen=True)
class DeltaReport:
    r: int
    delta_F: int
    delta_G: HalfInt
    closed_form_F: int
    closed_form_G: HalfInt

    @property
    def agree(self) -> bool:
        return self.delta_F == self.closed_form_F and self.delta_G == self.closed_form_G

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "delta_F": self.delta_F,
            "delta_G": str(self.delta_G),
            "closed_form_F": self.closed_form_F,
            "closed_form_G": str(self.closed_form_G),
            "agree": self.agree,
        }


def delta_report(c: RColoring, r: int) -> DeltaReport:
    return DeltaReport(
        r,
        flip_delta(c, r, "F"),
        flip_delta(c, r, "G"),
        closed_partial_F(c, r),
        closed_partial_G(c, r),
    )


@dataclass(frozen=True)
class LocalMinCertificate:
    coloring: RColoring
    objective: str
    deltas: tuple  # ints for F, HalfInt for G
    is_local_min: bool
    k: int
    w: int

    @property
    def violations(self) -> list[int]:
        return [r for r, d in enumerate(self.deltas, 1) if d > 0]

    def as_dict(self) -> dict:
        return {
            "n": self.coloring.n,
            "objective": self.objective,
            "is_local_min": self.is_local_min,
            "k": self.k,
            "w": self.w,
            "violations": self.violations,
        }


def certify_local_min(
    c: RColoring, objective: str = "F", spot_checks: int = 8, seed: int = 0
) -> LocalMinCertificate:
    """Evaluate all n closed-form deltas; a few are re-checked against the oracle."""
    _require_binary(c)
    if objective not in OBJECTIVES:
        raise ValueError(f"objective must be F or G, got {objective!r}")
    x = c.array()
    if objective == "F":
        deltas = tuple(int(d) for d in all_partials_F(x))
    else:
        deltas = tuple(HalfInt(int(d)) for d in all_partials_G_doubled(x))
    if c.n and spot_checks:
        rng = np.random.default_rng(seed)
        for r in rng.choice(np.arange(1, c.n + 1), size=min(spot_checks, c.n), replace=False):
            oracle = flip_delta(c, int(r), objective)
            if oracle != deltas[r - 1]:
                raise AssertionError(f"closed form disagrees with oracle at r={r}")
    k = c.ones
    return LocalMinCertificate(c, objective, deltas, all(d <= 0 for d in deltas), k, 2 * k - c.n)
