import random
from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import QUARTIC, SQRT2, random_gn, random_iet, random_point
from ietlab.dynamics import (
    bp_growth,
    decompose,
    first_return,
    orbit,
    periodic_points_up_to,
    pl_normalize,
    rate_count,
    rate_estimate,
)
from ietlab.gn import GnElem
from ietlab.groups import builtin
from ietlab.iet import Iet, product_of_restricted_rotations, restricted_rotation, rotation
from ietlab.intervals import IntervalSet
from ietlab.numfield import preset
from ietlab.plmap import PLMap

T = SQRT2.theta
A = T - 1
HALF = (F(0), F(1, 2))


def keane_4iet():
    u = QUARTIC.theta
    lengths = [u / 8, u * u / 8, u**3 / 16]
    lengths.append(1 - sum(lengths, QUARTIC.zero))
    return Iet.from_lengths(lengths, [3, 2, 1, 0])


def test_orbit_examples():
    o = orbit(Iet.identity(), F(1, 3), 5)
    assert o.points == [F(1, 3)] * 6 and o.period == 1
    o = orbit(rotation(F(1, 4)), F(0), 4)
    assert o.points == [0, F(1, 4), F(1, 2), F(3, 4), 0] and o.period == 4


def test_metabelian_kernel_orbits_have_three_points():
    gs = builtin("metabelian3", SQRT2)
    r, g = gs.gens["r"], gs.gens["g"]
    k = r * g * r.inverse()  # ell = 0
    h = k * g * k * r * g * r.inverse()
    for x in (F(0), F(1, 7), A / 2):
        pts = set()
        for f in (g, k, h, g * k, k * h * g):
            pts.add(f(x))
        pts.add(x)
        assert len(pts) <= 3


def test_growth_examples():
    tr = bp_growth(rotation(A), 20)
    assert tr.counts == [2] * 20 and tr.verdict == "bounded" and tr.bound == 2
    e = GnElem(3, [A / 3, F(1, 9), A / 5], [1, 2, 0])
    assert max(bp_growth(e.embed(), 30).counts) <= 6
    tr = bp_growth(keane_4iet(), 40)
    assert tr.verdict == "growing"


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9))
def test_growth_bound(seed):
    f = random_iet(random.Random(seed), 4)
    tr = bp_growth(f, 12)
    for k, c in enumerate(tr.counts, 1):
        assert c <= len(f.cuts) * k


def test_rate_examples():
    assert rate_estimate(Iet.identity(), F(1, 3), 10) == 0
    # the orbit of a rational point never meets the irrational break points
    f = keane_4iet()
    assert rate_estimate(f, F(1, 2), 20) == 0
    g = rotation(QUARTIC.theta / 3)
    x = F(1, 5)
    for n in (10, 40):
        c1 = rate_count(f, x, n)
        c2 = rate_count(g * f * g.inverse(), g(x), n)
        assert abs(c1 - c2) <= 2 * len(g.cuts)


def test_decompose_examples():
    rep = decompose(Iet.identity(), 5)
    assert rep.periodic == [(IntervalSet.unit(), 1)] and not rep.minimal
    rep = decompose(rotation(F(1, 4)), 5)
    assert rep.periodic == [(IntervalSet.unit(), 4)]
    f = restricted_rotation(A / 4, HALF)
    rep = decompose(f, 10)
    assert rep.minimal == [(IntervalSet([HALF]), "certified")]
    assert rep.periodic == [(IntervalSet([(F(1, 2), F(1))]), 1)]
    assert not rep.residual


def test_decompose_period_beyond_depth_is_residual():
    f = rotation(F(1, 7))
    rep = decompose(f, 3)
    assert not rep.periodic and rep.residual == IntervalSet.unit()
    assert decompose(f, 7).periodic == [(IntervalSet.unit(), 7)]
    rep = decompose(keane_4iet(), 5)
    assert [st for _, st in rep.minimal] == ["certified"]


def test_decompose_gn_blocks_are_minimal():
    e = GnElem(3, [A / 3, A / 5, A / 7])
    rep = decompose(e.embed(), 5)
    blocks = [IntervalSet([(F(i, 3), F(i + 1, 3))]) for i in range(3)]
    assert [s for s, _ in rep.minimal] == blocks
    assert all(st == "certified" for _, st in rep.minimal)


def test_decompose_invariance_random():
    rng = random.Random(11)
    for _ in range(40):
        f = random_gn(rng, rng.randint(1, 4)).embed() if rng.random() < 0.5 else random_iet(rng, 4)
        rep = decompose(f, 8)
        for comp in rep.components():
            assert f.image(comp) == comp
        for comp, k in rep.periodic:
            assert comp.issubset((f**k).fixed_set())


def test_first_return_of_rotation():
    f = rotation(A)
    ret = first_return(f, F(0), F(1, 2), 100)
    ind = ret.induced()
    assert len(ind) == 2 or len(ind) == 3
    assert ret.floors == IntervalSet.unit()


def test_pl_normalize_examples():
    g = A / 4
    f = product_of_restricted_rotations([(A / 5, HALF), (g, (F(1, 2), F(1)))])
    nf = pl_normalize(f)
    assert nf.image == GnElem(2, [A / 5, g]) and nf.pl == PLMap.identity()

    f = restricted_rotation(A / 6, (F(0), F(1, 3)))
    nf = pl_normalize(f)
    assert nf.image == GnElem(2, [A / 4, 0])
    assert nf.pl.slopes == (F(3, 2), F(3, 4))
    rng = random.Random(2)
    for _ in range(30):
        x = random_point(rng)
        assert nf.pl(f(x)) == nf.image.embed()(nf.pl(x))

    nf = pl_normalize(rotation(A))
    assert nf.image == GnElem(1, [A]) and nf.pl == PLMap.identity()
    assert pl_normalize(keane_4iet()) is None


def test_periodic_points_examples():
    res = periodic_points_up_to(rotation(F(1, 3)), 10)
    assert res.status == "found" and res.period == 3 and res.points == IntervalSet.unit()
    assert periodic_points_up_to(rotation(A), 10).status == "certified_none"
    gs = builtin("crystallographic", preset("cubic2"))
    ab = gs.evaluate("a b")
    assert periodic_points_up_to(ab, 60).status in ("certified_none", "none_up_to")


def test_report_dict():
    rep = decompose(restricted_rotation(A / 4, HALF), 5)
    d = rep.to_dict()
    assert d["minimal"][0]["status"] == "certified"
    assert d["periodic"][0] == {"set": [["1/2", "1"]], "period": 1}
