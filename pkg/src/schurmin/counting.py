"""Exact monochromatic Schur triple counts, the objective F and surrogate G.

Triples are {i, j, i+j} with 1 <= i < j and i + j <= n. ``include_equal``
adds the classical pairs i = j; F and G never use it.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import InvalidParameter, RColoring
from .halfint import HalfInt

# below this length np.convolve on integers beats the FFT and is exact
_DIRECT_CONV_MAX = 4096


class InvalidPalette(InvalidParameter):
    pass


@dataclass(frozen=True)
class TripleCount:
    n: int
    r: int
    per_color: tuple[int, ...]
    total: int

    def __post_init__(self):
        assert self.total == sum(self.per_color), "total must equal the per-color sum"
        assert len(self.per_color) == self.r

    def as_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "per_color": list(self.per_color), "total": self.total}


def max_pairs(n: int) -> int:
    """Number of admissible pairs i < j, i + j <= n."""
    return (n - 1) ** 2 // 4 if n >= 1 else 0


def count_naive(c: RColoring, include_equal: bool = False) -> TripleCount:
    """Walk every admissible pair, one row i at a time."""
    x = c.array()
    n = c.n
    per = np.zeros(c.r, dtype=np.int64)
    for i in range(1, n // 2 + 1):
        # j runs over i+1 .. n-i; storage is 0-based
        j = np.arange(i + 1, n - i + 1)
        if j.size:
            cj = x[j - 1]
            mono = (cj == x[i - 1]) & (x[j + i - 1] == cj)
            if mono.any():
                per[x[i - 1]] += int(mono.sum())
        if include_equal and 2 * i <= n and x[i - 1] == x[2 * i - 1]:
            per[x[i - 1]] += 1
    per_t = tuple(int(v) for v in per)
    return TripleCount(n, c.r, per_t, sum(per_t))


def autocorrelation(indicator: np.ndarray) -> np.ndarray:
    """out[s] = #{(a, b) : a + b = s, indicator[a] = indicator[b] = 1} (ordered pairs)."""
    ind = np.asarray(indicator, dtype=np.int64)
    if ind.size <= _DIRECT_CONV_MAX:
        return np.convolve(ind, ind)
    size = 1 << int(2 * ind.size - 1).bit_length()
    spec = np.fft.rfft(ind.astype(np.float64), size)
    raw = np.fft.irfft(spec * spec, size)[: 2 * ind.size - 1]
    out = np.rint(raw).astype(np.int64)
    err = float(np.max(np.abs(raw - out)))
    if err > 0.25:
        raise ArithmeticError(f"FFT rounding error {err} too large for exact counting")
    return out


def count_fast(c: RColoring, include_equal: bool = False) -> TripleCount:
    """Per-color counting via the autocorrelation of each color class."""
    n = c.n
    x = c.array()
    per = []
    for color in range(c.r):
        ind = np.zeros(n + 1, dtype=np.int64)
        ind[1:] = x == color
        if n < 3 or not ind.any():
            diag = int(np.sum(ind[1 : n // 2 + 1] & ind[2 : n + 1 : 2])) if include_equal and n >= 2 else 0
            per.append(diag)
            continue
        corr = autocorrelation(ind)[: n + 1]
        # ordered pairs summing to s minus the diagonal a = b = s/2
        diag = np.zeros(n + 1, dtype=np.int64)
        diag[2 : n + 1 : 2] = ind[1 : n // 2 + 1]
        pairs = (corr - diag) // 2
        if include_equal:
            pairs = pairs + diag
        per.append(int(np.dot(pairs, ind)))
    return TripleCount(n, c.r, tuple(per), sum(per))


def _require_binary(c: RColoring):
    if c.r != 2:
        raise InvalidPalette(f"F and G are defined for 2-colorings, got r={c.r}")


def eval_F(c: RColoring) -> int:
    _require_binary(c)
    return count_fast(c).total


def g_correction_doubled(x: np.ndarray) -> int:
    """Twice (G - F) = 2 sum_{i<=n/2} x_i (x_{2i} - 1) - sum x_i, for a 0/1 array."""
    n = x.size
    half = n // 2
    xi = x[:half]
    x2i = x[1 : 2 * half : 2]
    return int(2 * np.sum(xi * (x2i - 1)) - np.sum(x))


def eval_G(c: RColoring) -> HalfInt:
    _require_binary(c)
    return HalfInt(2 * eval_F(c) + g_correction_doubled(c.array()))
