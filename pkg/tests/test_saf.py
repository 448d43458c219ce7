import random
from fractions import Fraction as F

from helpers import CUBIC, SQRT2, random_iet
from ietlab.iet import Iet, product_of_restricted_rotations, restricted_rotation, rotation
from ietlab.saf import saf_distinguish, saf_invariant

A = SQRT2.theta - 1


def wedge(x, y, d):
    """x ^ y for coordinate vectors, expanded term by term."""
    m = [[F(0)] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            m[i][j] += F(x[i] * y[j] - x[j] * y[i], 2)
    return m


def test_saf_examples():
    assert saf_invariant(Iet.identity()).is_zero()
    assert saf_invariant(rotation(F(2, 7))).is_zero()
    s = saf_invariant(rotation(A))
    assert s.matrix[0][1] == 1 and s.matrix[1][0] == -1
    # oracle: lambda = (1 - a, a), t = (a, a - 1) with a = (-1, 1)
    expect = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(wedge([2, -1], [-1, 1], 2), wedge([-1, 1], [-2, 1], 2))]
    assert [list(r) for r in s.matrix] == expect


def test_saf_distinguish_examples():
    f = rotation(A)
    g = rotation(2 * A - (1 if 2 * A >= 1 else 0))
    assert saf_distinguish(f, g) == "not_conjugate"
    assert saf_distinguish(f, f) == "possibly_conjugate"
    h = restricted_rotation(A / 3, (F(1, 5), F(4, 5)))
    assert saf_distinguish(f, h * f * h.inverse()) == "possibly_conjugate"


def test_saf_properties():
    rng = random.Random(4)
    for _ in range(100):
        fld = rng.choice([SQRT2, CUBIC])
        f, h = random_iet(rng, 4, fld), random_iet(rng, 4, fld)
        d = fld.degree
        sf = saf_invariant(f, d)
        assert saf_invariant(h * f * h.inverse(), d) == sf
        assert saf_invariant(f.inverse(), d) == -sf
        m = sf.matrix
        assert all(m[i][j] == -m[j][i] for i in range(d) for j in range(d))


def test_saf_additive_over_supports():
    items = [(A / 3, (F(0), F(1, 3))), (A / 5, (F(1, 2), F(3, 4)))]
    f = product_of_restricted_rotations(items)
    parts = [saf_invariant(restricted_rotation(a, iv), 2) for a, iv in items]
    assert saf_invariant(f, 2) == parts[0] + parts[1]
