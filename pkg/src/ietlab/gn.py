"""The groups G_n: block-preserving IETs that rotate inside each block.

An element is a pair ``(alpha, sigma)``.  The unit interval is cut into the
``n`` blocks ``I_i = [i/n, (i+1)/n)`` (0-based here); ``sigma[i]`` is the block
that ``I_i`` is sent to and ``alpha[i]`` in ``[0, 1/n)`` is the rotation applied
inside it.  Composition follows

    alpha(f o g)[i] = alpha(f)[sigma(g)[i]] + alpha(g)[i]
    sigma(f o g)    = sigma(f) o sigma(g)

so ``GnElem`` is a faithful model of (S_n)^n x| Sym(n) and :meth:`GnElem.embed`
is an injective homomorphism into :class:`~ietlab.iet.Iet`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .iet import Iet
from .numfield import q_linear_rank
from .perm import perm_compose, perm_cycles, perm_inverse

__all__ = ["GnElem", "gn_compose", "gn_embed", "gn_order", "gn_periodic_point_free", "gn_recognize"]


def _num(x):
    return Fraction(x) if isinstance(x, int) else x


def _rational(x) -> Fraction:
    return x if isinstance(x, Fraction) else x.as_fraction()


def _reduce(x, n: int):
    """Representative of x in [0, 1/n)."""
    k = math.floor(x * n)
    return x - Fraction(k, n) if k else x


class GnElem:
    __slots__ = ("n", "alpha", "sigma")

    def __init__(self, n: int, alpha: Sequence, sigma: Sequence[int] | None = None):
        if n < 1:
            raise ValueError("n must be positive")
        if sigma is None:
            sigma = tuple(range(n))
        sigma = tuple(int(s) for s in sigma)
        if len(alpha) != n or len(sigma) != n:
            raise ValueError(f"alpha and sigma must have length {n}")
        if sorted(sigma) != list(range(n)):
            raise ValueError(f"sigma {sigma} is not a permutation of range({n})")
        self.n = n
        self.alpha = tuple(_reduce(_num(a), n) for a in alpha)
        self.sigma = sigma

    @classmethod
    def identity(cls, n: int) -> "GnElem":
        return cls(n, [Fraction(0)] * n)

    @classmethod
    def permutation(cls, sigma: Sequence[int]) -> "GnElem":
        """Element with trivial rotation vector that permutes the blocks."""
        return cls(len(sigma), [Fraction(0)] * len(sigma), sigma)

    def __eq__(self, other):
        if not isinstance(other, GnElem):
            return NotImplemented
        return self.n == other.n and self.sigma == other.sigma and self.alpha == other.alpha

    def __hash__(self):
        return hash((self.n, self.alpha, self.sigma))

    def __repr__(self):
        alpha = ", ".join(str(a) for a in self.alpha)
        return f"GnElem(n={self.n}, alpha=({alpha}), sigma={self.sigma})"

    def __mul__(self, other: "GnElem") -> "GnElem":
        if not isinstance(other, GnElem):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"cannot compose elements of G_{self.n} and G_{other.n}")
        alpha = [self.alpha[other.sigma[i]] + other.alpha[i] for i in range(self.n)]
        return GnElem(self.n, alpha, perm_compose(self.sigma, other.sigma))

    def inverse(self) -> "GnElem":
        inv = perm_inverse(self.sigma)
        alpha = [-self.alpha[inv[j]] for j in range(self.n)]
        return GnElem(self.n, alpha, inv)

    def __pow__(self, k: int) -> "GnElem":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = GnElem.identity(self.n)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def is_identity(self) -> bool:
        return self.sigma == tuple(range(self.n)) and not any(self.alpha)

    def has_fixed_point(self) -> bool:
        return any(self.sigma[i] == i and self.alpha[i] == 0 for i in range(self.n))

    def cycle_sums(self) -> list[tuple[tuple[int, ...], object]]:
        out = []
        for cyc in perm_cycles(self.sigma):
            total = Fraction(0)
            for i in cyc:
                total = total + self.alpha[i]
            out.append((cyc, total))
        return out

    def embed(self) -> Iet:
        n = self.n
        width = Fraction(1, n)
        cuts, trans = [], []
        for i, (a, s) in enumerate(zip(self.alpha, self.sigma)):
            left = Fraction(i, n)
            shift = Fraction(s - i, n)
            cuts.append(left)
            trans.append(a + shift)
            if a != 0:
                cuts.append(left + width - a)
                trans.append(a - width + shift)
        return Iet._trusted(cuts, trans)

    def periodic_point_free(self) -> bool:
        """True iff no power of the element has a fixed point.

        Over a cycle of sigma, the first return to one of its blocks is the
        rotation by the cycle sum; that is periodic iff the sum is rational.
        """
        return all(q_linear_rank([1, s]) == 2 for _, s in self.cycle_sums())

    def order(self) -> int | None:
        m = 1
        for cyc, s in self.cycle_sums():
            if q_linear_rank([1, s]) == 2:
                return None
            q = _rational(s) * self.n
            q = q - math.floor(q)
            k = len(cyc) * q.denominator
            m = m * k // math.gcd(m, k)
        return m


def gn_compose(f: GnElem, g: GnElem) -> GnElem:
    return f * g


def gn_embed(e: GnElem) -> Iet:
    return e.embed()


def gn_recognize(n: int, f: Iet) -> GnElem | None:
    """The unique ``e`` with ``e.embed() == f``, or ``None`` if f is not in G_n."""
    if n < 1:
        raise ValueError("n must be positive")
    alpha, sigma = [], []
    for i in range(n):
        y = f(Fraction(i, n))
        j = math.floor(y * n)
        alpha.append(y - Fraction(j, n))
        sigma.append(j)
    if sorted(sigma) != list(range(n)):
        return None
    cand = GnElem(n, alpha, sigma)
    return cand if cand.embed() == f else None


def gn_periodic_point_free(e: GnElem) -> bool:
    return e.periodic_point_free()


def gn_order(e: GnElem) -> int | None:
    return e.order()
