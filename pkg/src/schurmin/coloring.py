"""Colorings of [1, n] and the extremal block families.

A coloring stores one color index per integer 1..n (0-based storage,
1-based everywhere in the public formulas). Colors are 0..r-1; for r = 2
color 1 is the point x_i = 1 of the cube.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


class InvalidParameter(ValueError):
    """A family constructor or operation got parameters outside its domain."""


class ColoringParseError(ValueError):
    """Malformed coloring text. ``position`` is the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, eq=False)
class RColoring:
    n: int
    r: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.r < 2:
            raise InvalidParameter(f"palette size must be >= 2, got {self.r}")
        if len(self.colors) != self.n:
            raise InvalidParameter(f"expected {self.n} colors, got {len(self.colors)}")
        if self.colors and (min(self.colors) < 0 or max(self.colors) >= self.r):
            raise InvalidParameter(f"color index out of range [0, {self.r - 1}]")

    @classmethod
    def from_bits(cls, bits: Iterable[int], r: int = 2) -> "RColoring":
        colors = tuple(int(b) for b in bits)
        return cls(len(colors), r, colors)

    @classmethod
    def from_code(cls, code: int, n: int) -> "RColoring":
        """Bit i-1 of ``code`` is the color of i."""
        return cls(n, 2, tuple((code >> i) & 1 for i in range(n)))

    def to_code(self) -> int:
        self._require_binary()
        return sum(1 << i for i, c in enumerate(self.colors) if c)

    def array(self) -> np.ndarray:
        return np.asarray(self.colors, dtype=np.int64)

    def __getitem__(self, i: int) -> int:
        """Color of the integer ``i`` (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} outside [1, {self.n}]")
        return self.colors[i - 1]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, RColoring):
            return NotImplemented
        return (self.r, self.colors) == (other.r, other.colors)

    def __hash__(self):
        return hash((self.r, self.colors))

    def __str__(self):
        return format_coloring(self)

    @property
    def ones(self) -> int:
        self._require_binary()
        return sum(self.colors)

    def flip(self, i: int) -> "RColoring":
        """Flip the bit at 1-based index ``i`` (r = 2 only)."""
        self._require_binary()
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} outside [1, {self.n}]")
        cs = list(self.colors)
        cs[i - 1] ^= 1
        return RColoring(self.n, 2, tuple(cs))

    def runs(self) -> list[tuple[int, int]]:
        return to_runs(self.colors)

    def _require_binary(self):
        if self.r != 2:
            raise InvalidParameter(f"operation needs a 2-coloring, palette size is {self.r}")


@dataclass(frozen=True)
class RunLengthSpec:
    runs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for color, length in self.runs:
            if length < 1:
                raise InvalidParameter(f"run of color {color} has length {length}")

    @property
    def length(self) -> int:
        return sum(length for _, length in self.runs)

    def normalized(self) -> "RunLengthSpec":
        merged: list[list[int]] = []
        for color, length in self.runs:
            if merged and merged[-1][0] == color:
                merged[-1][1] += length
            else:
                merged.append([color, length])
        return RunLengthSpec(tuple((c, l) for c, l in merged))

    def expand(self, r: int = 2) -> RColoring:
        colors: list[int] = []
        for color, length in self.runs:
            colors.extend([color] * length)
        return RColoring(len(colors), r, tuple(colors))


@dataclass(frozen=True)
class FamilyParams:
    kind: str  # "Zs" | "Zinf" | "Extension"
    n: int
    s: int = 0
    t: int = 3
    r: int = 2

    def __post_init__(self):
        if self.kind not in ("Zs", "Zinf", "Extension"):
            raise InvalidParameter(f"unknown family {self.kind!r}")
        if self.kind == "Zinf" and not 3 <= self.t <= 11:
            raise InvalidParameter(f"t must lie in [3, 11], got {self.t}")
        if self.kind == "Extension" and self.r < 2:
            raise InvalidParameter(f"r must be >= 2, got {self.r}")
        if self.kind == "Zs" and self.s < 0:
            raise InvalidParameter(f"s must be >= 0, got {self.s}")

    @property
    def w(self) -> Fraction:
        """Ideal block unit n/(12s+11) of the Z_s family."""
        return Fraction(self.n, 12 * self.s + 11)

    def build(self) -> RColoring:
        if self.kind == "Zs":
            return make_zs(self.s, self.n)
        if self.kind == "Zinf":
            return make_zinf(self.t, self.n)
        return make_extension(self.r, self.n)


def to_runs(colors: Sequence[int]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for c in colors:
        if out and out[-1][0] == c:
            out[-1] = (c, out[-1][1] + 1)
        else:
            out.append((c, 1))
    return out


def _from_cumulative(blocks: Sequence[tuple[int, Fraction]], n: int, r: int = 2) -> RColoring:
    """Lay out blocks of exact (fractional) lengths; block b covers (floor B_{b-1}, floor B_b]."""
    colors: list[int] = []
    acc = Fraction(0)
    prev = 0
    for color, length in blocks:
        acc += length
        end = acc.numerator // acc.denominator
        colors.extend([color] * (end - prev))
        prev = end
    assert prev == n, (prev, n)
    return RColoring(n, r, tuple(colors))


def zs_blocks(s: int) -> list[tuple[int, int]]:
    """Block layout of Z_s as (color, multiple of w).

    0^{4w}, then 2s+1 alternating blocks of length 6w starting and ending
    with 1, then 0^{w}. For even s this is
    0^{4w} (1^{6w} 0^{6w})^{s/2} 1^{6w} (0^{6w} 1^{6w})^{s/2} 0^{w}.
    """
    return [(0, 4)] + [(1 - i % 2, 6) for i in range(2 * s + 1)] + [(0, 1)]


def make_zs(s: int, n: int) -> RColoring:
    """The Z_s block coloring with w = n/(12s+11), boundaries floored cumulatively."""
    if s < 0:
        raise InvalidParameter(f"s must be >= 0, got {s}")
    if n < 12 * s + 11:
        raise InvalidParameter(f"Z_{s} needs n >= {12 * s + 11}, got {n}")
    w = Fraction(n, 12 * s + 11)
    return _from_cumulative([(c, m * w) for c, m in zs_blocks(s)], n)


def make_zinf(t: int, n: int) -> RColoring:
    """(0^t 1^t) repeated, last period truncated to fit n."""
    if not 3 <= t <= 11:
        raise InvalidParameter(f"t must lie in [3, 11], got {t}")
    if n < 2 * t:
        raise InvalidParameter(f"Z_inf^{t} needs n >= {2 * t}, got {n}")
    return RColoring(n, 2, tuple((i // t) % 2 for i in range(n)))


def make_extension(r: int, n: int) -> RColoring:
    """r-coloring with dyadic sum-free top layers and a scaled Z_0 on [1, n/2^{r-2}].

    Color j-1 on (n/2^j, n/2^{j-1}] for 1 <= j <= r-2; color r-2 on
    [1, 4m/11] and (10m/11, m]; color r-1 on (4m/11, 10m/11], where
    m = n/2^{r-2}. Interval ends are floored.
    """
    if r < 2:
        raise InvalidParameter(f"r must be >= 2, got {r}")
    scale = 2 ** (r - 2)
    if n < scale * 11:
        raise InvalidParameter(f"extension with r={r} needs n >= {scale * 11}, got {n}")
    m = Fraction(n, scale)
    blocks = [(r - 2, 4 * m / 11), (r - 1, 6 * m / 11), (r - 2, m / 11)]
    for j in range(r - 2, 0, -1):
        # (n/2^j, n/2^{j-1}] has exact length n/2^j
        blocks.append((j - 1, Fraction(n, 2**j)))
    return _from_cumulative(blocks, n, r)


def complement(c: RColoring) -> RColoring:
    c._require_binary()
    return RColoring(c.n, 2, tuple(1 - x for x in c.colors))


_RUN_TOKEN = re.compile(r"(\d+)\^(\d+)")


def parse_coloring(text: str, r: int | None = None) -> RColoring:
    """Parse a digit string ("0011") or a run-length expression ("0^4 1^6 0^1").

    ``r`` defaults to max(2, largest digit + 1).
    """
    stripped = text.strip()
    if not stripped:
        raise ColoringParseError("empty coloring", 0)
    offset = len(text) - len(text.lstrip())
    if "^" in stripped:
        runs = []
        for m in re.finditer(r"\S+", text):
            tok = m.group()
            full = _RUN_TOKEN.fullmatch(tok)
            if full is None:
                raise ColoringParseError(f"malformed run token {tok!r}", m.start())
            color, length = int(full.group(1)), int(full.group(2))
            if length == 0:
                raise ColoringParseError(f"zero-length run {tok!r}", m.start())
            runs.append((color, length, m.start()))
        colors = [c for c, length, _ in runs for _ in range(length)]
        positions = [(c, p) for c, _, p in runs]
    else:
        colors, positions = [], []
        for i, ch in enumerate(stripped):
            if not ch.isdigit():
                raise ColoringParseError(f"unexpected character {ch!r}", offset + i)
            colors.append(int(ch))
            positions.append((int(ch), offset + i))
    if r is None:
        r = max(2, max(colors) + 1)
    for c, pos in positions:
        if c >= r:
            raise ColoringParseError(f"color {c} not below palette size {r}", pos)
    return RColoring(len(colors), r, tuple(colors))


def format_coloring(c: RColoring, style: str = "digits") -> str:
    """``style`` is "digits" or "runs" (normalized run-length expression)."""
    if style == "digits":
        if c.r > 10:
            raise InvalidParameter("digit style needs r <= 10")
        return "".join(str(x) for x in c.colors)
    if style == "runs":
        return " ".join(f"{color}^{length}" for color, length in to_runs(c.colors))
    raise InvalidParameter(f"unknown style {style!r}")
