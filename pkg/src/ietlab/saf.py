"""The SAF invariant of an IET, sum of length ^ translation over its intervals.

Inside a number field of degree d the wedge product R ^_Q R restricted to the
field is faithfully the space of antisymmetric d x d rational matrices on the
power basis: ``x ^ y`` is ``(X Y^T - Y X^T) / 2`` for coordinate vectors X, Y.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .iet import Iet
from .numfield import AlgebraicNumber, to_fraction_vector

__all__ = ["SafValue", "saf_distinguish", "saf_invariant"]


@dataclass(frozen=True)
class SafValue:
    matrix: tuple  # tuple of row tuples of Fractions

    @property
    def degree(self) -> int:
        return len(self.matrix)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.matrix)

    def __add__(self, other: "SafValue") -> "SafValue":
        return SafValue(tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix)
        ))

    def __neg__(self) -> "SafValue":
        return SafValue(tuple(tuple(-a for a in r) for r in self.matrix))

    def to_list(self) -> list[list[str]]:
        return [[str(a) for a in r] for r in self.matrix]

    def __str__(self):
        width = max(len(str(a)) for r in self.matrix for a in r)
        return "\n".join(" ".join(str(a).rjust(width) for a in r) for r in self.matrix)


def _degree(f: Iet) -> int:
    for x in f.cuts + f.translations:
        if isinstance(x, AlgebraicNumber):
            return x.field.degree
    return 1


def saf_invariant(f: Iet, degree: int | None = None) -> SafValue:
    d = degree or _degree(f)
    acc = [[Fraction(0)] * d for _ in range(d)]
    for lam, t in zip(f.lengths(), f.translations):
        x = to_fraction_vector(lam, d)
        y = to_fraction_vector(t, d)
        for i in range(d):
            if not x[i] and not y[i]:
                continue
            for j in range(d):
                acc[i][j] += (x[i] * y[j] - y[i] * x[j]) / 2
    return SafValue(tuple(tuple(r) for r in acc))


def saf_distinguish(f: Iet, g: Iet) -> str:
    """``"not_conjugate"`` when the invariants differ, else ``"possibly_conjugate"``."""
    d = max(_degree(f), _degree(g))
    if saf_invariant(f, d) != saf_invariant(g, d):
        return "not_conjugate"
    return "possibly_conjugate"
