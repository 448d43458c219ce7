"""Interval exchange transformations of [0, 1) with exact endpoints.

An :class:`Iet` is stored as the left endpoints of its maximal continuity
intervals together with the translation applied on each.  Construction
checks bijectivity and merges neighbours sharing a translation, so two IETs
are equal exactly when they are equal as maps.

``f * g`` is the composition ``f o g`` (apply ``g`` first).
"""

from __future__ import annotations

import math
from bisect import bisect_right
from fractions import Fraction
from typing import Iterable, Sequence

from .intervals import IntervalSet

__all__ = [
    "Iet",
    "IetError",
    "break_points",
    "compose",
    "evaluate",
    "fixed_set",
    "inverse",
    "iet_order",
    "power",
    "product_of_restricted_rotations",
    "restricted_rotation",
    "rotation",
    "support",
    "translation_set",
]

ZERO = Fraction(0)
ONE = Fraction(1)


class IetError(ValueError):
    """Data that does not define a bijective IET of [0, 1)."""


def _num(x):
    if isinstance(x, int):
        return Fraction(x)
    return x


def _merge(cuts, trans):
    out_c, out_t = [cuts[0]], [trans[0]]
    for c, t in zip(cuts[1:], trans[1:]):
        if t != out_t[-1]:
            out_c.append(c)
            out_t.append(t)
    return tuple(out_c), tuple(out_t)


class Iet:
    """A bijection of [0, 1) that translates each of finitely many intervals."""

    __slots__ = ("cuts", "translations", "_hash")

    def __init__(self, cuts: Sequence, translations: Sequence):
        cuts = [_num(c) for c in cuts]
        trans = [_num(t) for t in translations]
        if not cuts:
            raise IetError("an IET needs at least one interval")
        if len(cuts) != len(trans):
            raise IetError(f"{len(cuts)} cuts but {len(trans)} translations")
        if cuts[0] != 0:
            raise IetError("first cut must be 0")
        for a, b in zip(cuts, cuts[1:]):
            if not a < b:
                raise IetError(f"cuts must be strictly increasing ({a} then {b})")
        if not cuts[-1] < 1:
            raise IetError("cuts must lie in [0, 1)")
        ends = cuts[1:] + [ONE]
        images = sorted(((a + t, b + t) for a, b, t in zip(cuts, ends, trans)), key=lambda p: p[0])
        for (lo0, hi0), (lo1, hi1) in zip(images, images[1:]):
            if lo1 < hi0:
                raise IetError(f"images [{lo0}, {hi0}) and [{lo1}, {hi1}) overlap")
        pos = ZERO
        for lo, hi in images:
            if lo != pos:
                raise IetError(f"images leave a gap at {pos}: map is not a bijection of [0, 1)")
            pos = hi
        if pos != 1:
            raise IetError("images do not cover [0, 1)")
        self.cuts, self.translations = _merge(cuts, trans)
        self._hash = None

    @classmethod
    def _trusted(cls, cuts, trans) -> "Iet":
        obj = object.__new__(cls)
        obj.cuts, obj.translations = _merge(cuts, trans)
        obj._hash = None
        return obj

    @classmethod
    def identity(cls) -> "Iet":
        return cls._trusted((ZERO,), (ZERO,))

    @classmethod
    def from_lengths(cls, lengths: Sequence, order: Sequence[int]) -> "Iet":
        """IET from interval lengths and ``order[i]`` = slot of interval i in the image."""
        lengths = [_num(x) for x in lengths]
        if sorted(order) != list(range(len(lengths))):
            raise IetError("order must be a permutation of range(len(lengths))")
        total = ZERO
        for x in lengths:
            if not x > 0:
                raise IetError("lengths must be positive")
            total = total + x
        if total != 1:
            raise IetError("lengths must sum to 1")
        slot_len = [None] * len(lengths)
        for i, s in enumerate(order):
            slot_len[s] = lengths[i]
        slot_start, acc = [], ZERO
        for x in slot_len:
            slot_start.append(acc)
            acc = acc + x
        cuts, trans, acc = [], [], ZERO
        for i, x in enumerate(lengths):
            cuts.append(acc)
            trans.append(slot_start[order[i]] - acc)
            acc = acc + x
        return cls(cuts, trans)

    # -- basic views --------------------------------------------------------
    def __len__(self) -> int:
        return len(self.cuts)

    def intervals(self) -> list[tuple]:
        """``[(a, b, t), ...]`` for the maximal continuity intervals."""
        ends = self.cuts[1:] + (ONE,)
        return list(zip(self.cuts, ends, self.translations))

    def lengths(self) -> tuple:
        ends = self.cuts[1:] + (ONE,)
        return tuple(b - a for a, b in zip(self.cuts, ends))

    def permutation(self) -> tuple[int, ...]:
        """Slot of each interval in the image order (display view)."""
        starts = [a + t for a, t in zip(self.cuts, self.translations)]
        ranked = sorted(range(len(starts)), key=lambda i: starts[i])
        out = [0] * len(starts)
        for slot, i in enumerate(ranked):
            out[i] = slot
        return tuple(out)

    def is_identity(self) -> bool:
        return len(self.cuts) == 1 and self.translations[0] == 0

    def __eq__(self, other):
        if not isinstance(other, Iet):
            return NotImplemented
        return self.cuts == other.cuts and self.translations == other.translations

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.cuts, self.translations))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"[{a}, {b}) -> +({t})" for a, b, t in self.intervals())
        return f"Iet({body})"

    # -- evaluation ---------------------------------------------------------
    def index(self, x) -> int:
        if x < 0 or not x < 1:
            raise ValueError(f"point {x} outside [0, 1)")
        return bisect_right(self.cuts, x) - 1

    def __call__(self, x):
        return x + self.translations[self.index(x)]

    def pieces(self, a, b) -> list[tuple]:
        """Split [a, b) at the cuts: ``[(x0, x1, t), ...]``."""
        j = self.index(a)
        out = []
        start = a
        n = len(self.cuts)
        while True:
            nxt = self.cuts[j + 1] if j + 1 < n else ONE
            if nxt >= b:
                out.append((start, b, self.translations[j]))
                return out
            out.append((start, nxt, self.translations[j]))
            start = nxt
            j += 1

    def image(self, s: IntervalSet) -> IntervalSet:
        out = []
        for a, b in s:
            for x0, x1, t in self.pieces(a, b):
                out.append((x0 + t, x1 + t))
        return IntervalSet(out)

    def preimage(self, s: IntervalSet) -> IntervalSet:
        return self.inverse().image(s)

    # -- group operations ---------------------------------------------------
    def __mul__(self, other: "Iet") -> "Iet":
        if not isinstance(other, Iet):
            return NotImplemented
        if other.is_identity():
            return self
        if self.is_identity():
            return other
        fc, ft = self.cuts, self.translations
        nf = len(fc)
        gc = other.cuts + (ONE,)
        out_c, out_t = [], []
        for i, t in enumerate(other.translations):
            a, b = gc[i], gc[i + 1]
            ya, yb = a + t, b + t
            j = bisect_right(fc, ya) - 1
            start = a
            while True:
                out_c.append(start)
                out_t.append(t + ft[j])
                nxt = fc[j + 1] if j + 1 < nf else ONE
                if nxt >= yb:
                    break
                start = nxt - t
                j += 1
        return Iet._trusted(out_c, out_t)

    def inverse(self) -> "Iet":
        pieces = sorted(((a + t, -t) for a, t in zip(self.cuts, self.translations)), key=lambda p: p[0])
        return Iet._trusted([p[0] for p in pieces], [p[1] for p in pieces])

    def __invert__(self) -> "Iet":
        return self.inverse()

    def __pow__(self, n: int) -> "Iet":
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = Iet.identity()
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- derived sets -------------------------------------------------------
    def break_points(self) -> frozenset:
        """Discontinuities plus 0; the cuts of the canonical form."""
        return frozenset(self.cuts)

    def translation_set(self) -> frozenset:
        return frozenset(self.translations)

    def fixed_set(self) -> IntervalSet:
        return IntervalSet((a, b) for a, b, t in self.intervals() if t == 0)

    def support(self) -> IntervalSet:
        return IntervalSet((a, b) for a, b, t in self.intervals() if t != 0)

    def conjugate(self, h: "Iet") -> "Iet":
        """``h o self o h^-1``."""
        return h * self * h.inverse()


# ---------------------------------------------------------------------------
# function-style API


def evaluate(f: Iet, x):
    return f(x)


def compose(f: Iet, g: Iet) -> Iet:
    """``f o g``."""
    return f * g


def inverse(f: Iet) -> Iet:
    return f.inverse()


def power(f: Iet, n: int) -> Iet:
    return f**n


def break_points(f: Iet) -> frozenset:
    return f.break_points()


def translation_set(f: Iet) -> frozenset:
    return f.translation_set()


def fixed_set(f: Iet) -> IntervalSet:
    return f.fixed_set()


def support(f: Iet) -> IntervalSet:
    return f.support()


def rotation(a) -> Iet:
    """Circle rotation x -> x + a mod 1 as a 2-IET (``a`` reduced mod 1)."""
    a = _num(a)
    a = a - math.floor(a)
    if a == 0:
        return Iet.identity()
    return Iet._trusted((ZERO, 1 - a), (a, a - 1))


def _rotation_pieces(angle, a, b):
    if angle == 0:
        return [(a, ZERO)]
    return [(a, angle), (b - angle, angle - (b - a))]


def restricted_rotation(angle, a, b=None) -> Iet:
    """Rotation by ``angle`` of the circle [a, b), identity elsewhere.

    ``a`` may also be a pair ``(a, b)``.  Requires ``0 <= angle < b - a``.
    """
    if b is None:
        a, b = a
    return product_of_restricted_rotations([(angle, (a, b))])


def product_of_restricted_rotations(items: Iterable[tuple]) -> Iet:
    """Product of restricted rotations ``[(angle, (a, b)), ...]`` with disjoint supports."""
    items = [(_num(angle), (_num(a), _num(b))) for angle, (a, b) in items]
    items.sort(key=lambda it: it[1][0])
    cuts, trans = [], []
    pos = ZERO
    for angle, (a, b) in items:
        if not (0 <= a < b <= 1):
            raise IetError(f"support [{a}, {b}) is not a nonempty subinterval of [0, 1)")
        if a < pos:
            raise IetError(f"support [{a}, {b}) overlaps a previous support")
        if not (0 <= angle < b - a):
            raise IetError(f"angle {angle} outside [0, {b - a})")
        if a > pos:
            cuts.append(pos)
            trans.append(ZERO)
        for c, t in _rotation_pieces(angle, a, b):
            cuts.append(c)
            trans.append(t)
        pos = b
    if pos < 1:
        cuts.append(pos)
        trans.append(ZERO)
    return Iet._trusted(cuts, trans)


def iet_order(f: Iet, max_order: int = 10_000) -> int | None:
    """Least m >= 1 with f^m = id, or ``None`` if none up to ``max_order``."""
    g = f
    for m in range(1, max_order + 1):
        if g.is_identity():
            return m
        g = g * f
    return None
