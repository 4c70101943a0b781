"""Exact half-integer scalars.

Values of the surrogate objective and the volley arguments live on the
lattice (1/2)Z. They are stored doubled so that every comparison against
a threshold such as 1/2 or -1 is an integer comparison.
"""
from __future__ import annotations

import functools
from fractions import Fraction


def _doubled(other) -> int:
    if isinstance(other, HalfInt):
        return other.doubled
    if isinstance(other, int):
        return 2 * other
    if isinstance(other, Fraction) and (2 * other).denominator == 1:
        return int(2 * other)
    return NotImplemented


@functools.total_ordering
class HalfInt:
    """A number ``doubled / 2`` with exact arithmetic."""

    __slots__ = ("doubled",)

    def __init__(self, doubled: int):
        if not isinstance(doubled, int):
            doubled = int(doubled)
        object.__setattr__(self, "doubled", doubled)

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    @classmethod
    def of(cls, value) -> "HalfInt":
        """Build from an int, a Fraction with denominator <= 2, or a HalfInt."""
        d = _doubled(value)
        if d is NotImplemented:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(d)

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def __add__(self, other):
        d = _doubled(other)
        return NotImplemented if d is NotImplemented else HalfInt(self.doubled + d)

    __radd__ = __add__

    def __sub__(self, other):
        d = _doubled(other)
        return NotImplemented if d is NotImplemented else HalfInt(self.doubled - d)

    def __rsub__(self, other):
        d = _doubled(other)
        return NotImplemented if d is NotImplemented else HalfInt(d - self.doubled)

    def __mul__(self, other):
        # only integer scaling keeps us on the lattice
        if isinstance(other, int):
            return HalfInt(self.doubled * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return HalfInt(-self.doubled)

    def __eq__(self, other):
        d = _doubled(other)
        return NotImplemented if d is NotImplemented else self.doubled == d

    def __lt__(self, other):
        d = _doubled(other)
        return NotImplemented if d is NotImplemented else self.doubled < d

    def __hash__(self):
        if self.doubled % 2 == 0:
            return hash(self.doubled // 2)
        return hash(Fraction(self.doubled, 2))

    def __float__(self):
        return self.doubled / 2

    def to_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __repr__(self):
        return f"HalfInt({self})"

    def __str__(self):
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"
