"""Random generators of exact test data shared by the test modules."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from ietlab.gn import GnElem
from ietlab.iet import Iet
from ietlab.numfield import preset

SQRT2 = preset("sqrt2")
CUBIC = preset("cubic2")
QUARTIC = preset("quartic2")


def frac01(x):
    return x - math.floor(x)


def random_point(rng: random.Random, field=SQRT2, rational=False):
    """A point of [0, 1): small rational plus (maybe) an integer multiple of t."""
    q = Fraction(rng.randint(0, 60), rng.randint(1, 12))
    if rational:
        return frac01(field(q))
    return frac01(field(q) + rng.randint(-3, 3) * field.theta / rng.randint(1, 5))


def random_iet(rng: random.Random, max_pieces=5, field=SQRT2, rational=False) -> Iet:
    k = rng.randint(1, max_pieces)
    pts = set()
    while len(pts) < k - 1:
        p = random_point(rng, field, rational)
        if p != 0:
            pts.add(p)
    cuts = [field.zero] + sorted(pts)
    ends = cuts[1:] + [field.one]
    lengths = [b - a for a, b in zip(cuts, ends)]
    order = list(range(k))
    rng.shuffle(order)
    return Iet.from_lengths(lengths, order)


def random_gn(rng: random.Random, n=None, field=SQRT2, rational_only=False, grid=24) -> GnElem:
    n = n or rng.randint(1, 6)
    alpha = []
    for _ in range(n):
        if rng.random() < 0.25:
            alpha.append(Fraction(0))
        elif rational_only or rng.random() < 0.3:
            alpha.append(Fraction(rng.randint(0, grid - 1), grid * n))
        else:
            alpha.append(random_point(rng, field) / n)
    sigma = list(range(n))
    rng.shuffle(sigma)
    return GnElem(n, alpha, sigma)


def probes(rng: random.Random, count=50, field=SQRT2):
    return [random_point(rng, field) for _ in range(count)]
