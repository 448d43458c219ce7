"""Orientation-preserving piecewise-affine bijections of [0, 1).

Used for the PL homeomorphisms that normalise products of restricted
rotations, and for checking conjugacy identities as exact equalities of
piecewise-affine maps (an IET is the special case where every slope is 1).
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from typing import Sequence

from .iet import Iet

ZERO = Fraction(0)
ONE = Fraction(1)


def _num(x):
    return Fraction(x) if isinstance(x, int) else x


class PLMap:
    """Map given by pieces ``(start, slope, offset)``: x -> slope*x + offset on [start, next start)."""

    __slots__ = ("starts", "slopes", "offsets")

    def __init__(self, starts: Sequence, slopes: Sequence, offsets: Sequence):
        starts = [_num(s) for s in starts]
        slopes = [_num(s) for s in slopes]
        offsets = [_num(o) for o in offsets]
        if not starts or starts[0] != 0:
            raise ValueError("pieces must start at 0")
        if not (len(starts) == len(slopes) == len(offsets)):
            raise ValueError("starts, slopes and offsets must have equal length")
        for s in slopes:
            if not s > 0:
                raise ValueError("slopes must be positive")
        ends = starts[1:] + [ONE]
        images = sorted((m * a + o, m * b + o) for a, b, m, o in zip(starts, ends, slopes, offsets))
        pos = ZERO
        for lo, hi in images:
            if lo != pos:
                raise ValueError("pieces do not map [0, 1) bijectively onto [0, 1)")
            pos = hi
        if pos != 1:
            raise ValueError("pieces do not cover [0, 1)")
        self._set(starts, slopes, offsets)

    def _set(self, starts, slopes, offsets):
        s, m, o = [starts[0]], [slopes[0]], [offsets[0]]
        for a, mm, oo in zip(starts[1:], slopes[1:], offsets[1:]):
            if mm == m[-1] and oo == o[-1]:
                continue
            s.append(a)
            m.append(mm)
            o.append(oo)
        self.starts, self.slopes, self.offsets = tuple(s), tuple(m), tuple(o)

    @classmethod
    def _trusted(cls, starts, slopes, offsets) -> "PLMap":
        obj = object.__new__(cls)
        obj._set(starts, slopes, offsets)
        return obj

    @classmethod
    def identity(cls) -> "PLMap":
        return cls._trusted([ZERO], [ONE], [ZERO])

    @classmethod
    def from_iet(cls, f: Iet) -> "PLMap":
        return cls._trusted(list(f.cuts), [ONE] * len(f.cuts), list(f.translations))

    @classmethod
    def from_blocks(cls, domain: Sequence[tuple], target: Sequence[tuple]) -> "PLMap":
        """Affine on each ``domain[i]`` onto ``target[i]``; both lists tile [0, 1)."""
        starts, slopes, offsets = [], [], []
        for (a, b), (c, d) in zip(domain, target):
            a, b, c, d = (_num(v) for v in (a, b, c, d))
            m = (d - c) / (b - a)
            starts.append(a)
            slopes.append(m)
            offsets.append(c - m * a)
        return cls(starts, slopes, offsets)

    def pieces(self) -> list[tuple]:
        ends = self.starts[1:] + (ONE,)
        return list(zip(self.starts, ends, self.slopes, self.offsets))

    def breakpoints(self) -> tuple:
        return self.starts

    def __call__(self, x):
        if x < 0 or not x < 1:
            raise ValueError(f"point {x} outside [0, 1)")
        i = bisect_right(self.starts, x) - 1
        return self.slopes[i] * x + self.offsets[i]

    def is_continuous(self) -> bool:
        return all(
            m0 * b + o0 == m1 * b + o1
            for (_, b, m0, o0), (_, _, m1, o1) in zip(self.pieces(), self.pieces()[1:])
        )

    def inverse(self) -> "PLMap":
        items = []
        for a, b, m, o in self.pieces():
            items.append((m * a + o, 1 / m, -o / m))
        items.sort(key=lambda p: p[0])
        return PLMap._trusted([p[0] for p in items], [p[1] for p in items], [p[2] for p in items])

    def __mul__(self, other: "PLMap") -> "PLMap":
        """``self o other``."""
        if isinstance(other, Iet):
            other = PLMap.from_iet(other)
        if not isinstance(other, PLMap):
            return NotImplemented
        fs = self.starts
        nf = len(fs)
        starts, slopes, offsets = [], [], []
        for a, b, m, o in other.pieces():
            ya, yb = m * a + o, m * b + o
            j = bisect_right(fs, ya) - 1
            x = a
            while True:
                starts.append(x)
                slopes.append(self.slopes[j] * m)
                offsets.append(self.slopes[j] * o + self.offsets[j])
                nxt = fs[j + 1] if j + 1 < nf else ONE
                if nxt >= yb:
                    break
                x = (nxt - o) / m
                j += 1
        return PLMap._trusted(starts, slopes, offsets)

    def __rmul__(self, other):
        if isinstance(other, Iet):
            return PLMap.from_iet(other) * self
        return NotImplemented

    def conjugate(self, f) -> "PLMap":
        """``self o f o self^-1``."""
        return self * f * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Iet):
            other = PLMap.from_iet(other)
        if not isinstance(other, PLMap):
            return NotImplemented
        return (self.starts, self.slopes, self.offsets) == (other.starts, other.slopes, other.offsets)

    def __hash__(self):
        return hash((self.starts, self.slopes, self.offsets))

    def __repr__(self):
        body = ", ".join(f"[{a}, {b}): {m}*x + {o}" for a, b, m, o in self.pieces())
        return f"PLMap({body})"
