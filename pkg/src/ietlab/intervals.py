"""Finite unions of half-open intervals [a, b) with exact endpoints."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator


def _num(x):
    return Fraction(x) if isinstance(x, int) else x


class IntervalSet:
    """Sorted, disjoint, nonempty half-open intervals; adjacent ones are merged.

    Two sets are equal iff they cover the same points.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[tuple] = ()):
        items = [(_num(a), _num(b)) for a, b in parts]
        for a, b in items:
            if b < a:
                raise ValueError(f"reversed interval [{a}, {b})")
        items = [(a, b) for a, b in items if a != b]
        items.sort(key=lambda p: p[0])
        merged: list[tuple] = []
        for a, b in items:
            if merged and a <= merged[-1][1]:
                if b > merged[-1][1]:
                    merged[-1] = (merged[-1][0], b)
            else:
                merged.append((a, b))
        self._parts = tuple(merged)

    @classmethod
    def unit(cls) -> "IntervalSet":
        return cls([(Fraction(0), Fraction(1))])

    @property
    def parts(self) -> tuple[tuple, ...]:
        return self._parts

    def __iter__(self) -> Iterator[tuple]:
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __bool__(self) -> bool:
        return bool(self._parts)

    def is_empty(self) -> bool:
        return not self._parts

    def __eq__(self, other):
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self):
        return hash(self._parts)

    def __repr__(self):
        if not self._parts:
            return "IntervalSet(empty)"
        return " u ".join(f"[{a}, {b})" for a, b in self._parts)

    def measure(self):
        total = Fraction(0)
        for a, b in self._parts:
            total = total + (b - a)
        return total

    def __contains__(self, x) -> bool:
        for a, b in self._parts:
            if a <= x < b:
                return True
            if x < a:
                return False
        return False

    def endpoints(self) -> list:
        out = []
        for a, b in self._parts:
            out.extend((a, b))
        return out

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self._parts + other._parts)

    __or__ = union

    def intersection(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        i = j = 0
        A, B = self._parts, other._parts
        while i < len(A) and j < len(B):
            a0, a1 = A[i]
            b0, b1 = B[j]
            lo = a0 if a0 >= b0 else b0
            hi = a1 if a1 <= b1 else b1
            if lo < hi:
                out.append((lo, hi))
            if a1 <= b1:
                i += 1
            else:
                j += 1
        return IntervalSet(out)

    __and__ = intersection

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        B = other._parts
        for a, b in self._parts:
            cur = a
            for c, d in B:
                if d <= cur:
                    continue
                if c >= b:
                    break
                if c > cur:
                    out.append((cur, c))
                if d > cur:
                    cur = d
                if cur >= b:
                    break
            if cur < b:
                out.append((cur, b))
        return IntervalSet(out)

    __sub__ = difference

    def complement(self) -> "IntervalSet":
        """Complement inside [0, 1)."""
        return IntervalSet.unit().difference(self)

    def issubset(self, other: "IntervalSet") -> bool:
        return self.difference(other).is_empty()

    def isdisjoint(self, other: "IntervalSet") -> bool:
        return self.intersection(other).is_empty()
