"""Acceptance criteria, one test each, with wall-clock limits.

Every criterion records a ``PASS``/``FAIL`` line; ``conftest.py`` prints the
lines at the end of the pytest run.  Running this file directly prints them
too::

    python3 tests/test_acceptance.py
"""

import random
import sys
import time
from fractions import Fraction as F
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import CUBIC, QUARTIC, SQRT2, random_gn, random_iet, random_point  # noqa: E402
from ietlab.dynamics import bp_growth, decompose, pl_normalize, rate_estimate  # noqa: E402
from ietlab.gn import GnElem, gn_recognize  # noqa: E402
from ietlab.groups import (  # noqa: E402
    builtin,
    commutator,
    commute_check,
    ell_morphism,
    free_up_to,
    local_permutation,
    relation_check,
    wreath_embedding,
)
from ietlab.iet import Iet, product_of_restricted_rotations, rotation  # noqa: E402
from ietlab.intervals import IntervalSet  # noqa: E402
from ietlab.perm import generate_group  # noqa: E402
from ietlab.saf import saf_invariant  # noqa: E402

A = SQRT2.theta - 1
RESULTS: dict[int, str] = {}


def _compose(p, q):
    # independent permutation arithmetic: (p o q)(i) = p[q[i]]
    return tuple(p[i] for i in q)


def _inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _criterion(num, title, limit):
    def wrap(fn):
        def test():
            t0 = time.perf_counter()
            ok, detail = fn()
            elapsed = time.perf_counter() - t0
            in_time = elapsed < limit
            verdict = "PASS" if ok and in_time else "FAIL"
            line = f"criterion {num:>2} {verdict}  {title}  ({elapsed:.1f} s, limit {limit} s)"
            if detail:
                line += f"  {detail}"
            RESULTS[num] = line
            print(line)
            assert ok, detail
            assert in_time, f"took {elapsed:.1f} s, limit {limit} s"

        test.__name__ = fn.__name__
        test.__doc__ = title
        return test

    return wrap


def _keane_4iet():
    u = QUARTIC.theta
    lengths = [u / 8, u * u / 8, u**3 / 16]
    lengths.append(1 - sum(lengths, QUARTIC.zero))
    return Iet.from_lengths(lengths, [3, 2, 1, 0])


@_criterion(1, "BS(1,-1) witness: relation holds, free up to 6", 60)
def test_c01_bs11():
    gs = builtin("bs11", QUARTIC)
    rels = relation_check(gs)
    rep = free_up_to(gs, 6)
    return all(r.holds for r in rels) and rep.free is True, rep.verdict


_CRYST_REASON = (
    "a b a^-1 b^-1 is the identity on [1/2, 3/4) for every admissible alpha, beta, "
    "so the generated action has fixed points; see the decision ledger"
)


@pytest.mark.xfail(strict=True, reason=_CRYST_REASON)
@_criterion(2, "crystallographic witness: both relators hold, free up to 5", 60)
def test_c02_crystallographic():
    gs = builtin("crystallographic", CUBIC)
    rels = relation_check(gs)
    rep = free_up_to(gs, 5)
    rel_ok = all(r.holds for r in rels)
    detail = f"relators {'hold' if rel_ok else 'FAIL'}; {rep.verdict}"
    if rep.fixed_set is not None:
        detail += f" (fixed set {rep.fixed_set})"
    return rel_ok and rep.free is True, detail


@_criterion(3, "G_n isomorphism on 1000 random pairs", 30)
def test_c03_gn_isomorphism():
    rng = random.Random(3)
    for _ in range(1000):
        n = rng.randint(1, 6)
        f, g = random_gn(rng, n), random_gn(rng, n)
        if (f * g).embed() != f.embed() * g.embed():
            return False, f"embedding not multiplicative for {f}, {g}"
        if gn_recognize(n, f.embed()) != f:
            return False, f"recognize(embed) != id for {f}"
    return True, ""


@_criterion(4, "metabelian suite: commutator supports, order 3, commuting, distinct BP sets", 60)
def test_c04_metabelian():
    rng = random.Random(4)
    gs = builtin("metabelian3", SQRT2)
    r, g = gs.gens["r"], gs.gens["g"]
    for i in range(20):
        beta = F(rng.randint(1, 59), 180) if i % 2 else (A * rng.randint(1, 9) / 28)
        c = commutator(rotation(beta), g)
        support = IntervalSet([(F(k, 3), F(k, 3) + beta) for k in range(3)])
        if c.support() != support:
            return False, f"support of [R_{beta}, g] is {c.support()}"
        if c.is_identity() or (c * c).is_identity() or not (c**3).is_identity():
            return False, f"[R_{beta}, g] does not have order 3"
    names = gs.names
    comms = []
    while len(comms) < 50:
        f = gs.evaluate(" ".join(f"{rng.choice(names)}^{rng.choice([1, -1])}" for _ in range(rng.randint(1, 5))))
        h = gs.evaluate(" ".join(f"{rng.choice(names)}^{rng.choice([1, -1])}" for _ in range(rng.randint(1, 5))))
        c = commutator(f, h)
        if not c.is_identity():
            if not (c**3).is_identity():
                return False, "commutator of order other than 3"
            comms.append(c)
    for i, c1 in enumerate(comms):
        for c2 in comms[i + 1:]:
            if not commute_check(c1, c2):
                return False, "two commutators do not commute"
    bps = [frozenset(commutator(r**n, g).break_points()) for n in range(1, 11)]
    if len(set(bps)) != 10:
        return False, "break point sets of [R_alpha^n, g] not pairwise distinct"
    return True, ""


@_criterion(5, "alternating suite: local permutations of C_{beta,t}, A_5 generated, morphisms", 120)
def test_c05_alternating():
    n = 5
    rng = random.Random(5)
    gs = builtin("alternating5", SQRT2)
    fam = gs.family
    sigma = tuple((i + 1) % n for i in range(n))
    a5 = sorted(generate_group([(1, 2, 0, 3, 4), (1, 2, 3, 4, 0)]))
    collected, cs = [], []
    for _ in range(10):
        tau = rng.choice(a5)
        beta = rng.choice([F(rng.randint(1, 50), 51 * n), A * rng.randint(1, 4) / (11 * n)])
        t = Iet([F(i, n) for i in range(n)], [F(tau[i] - i, n) for i in range(n)])
        c = commutator(rotation(beta), t)
        omega = local_permutation(c, F(0), n)
        expect = _compose(_compose(sigma, tau), _compose(_inv(sigma), _inv(tau)))
        if omega != expect:
            return False, f"omega(C, 0) = {omega}, expected {expect} for tau = {tau}"
        collected.append(omega)
        cs.append(c)
    if len(generate_group(collected)) != 60:
        return False, "local permutations do not generate A_5"
    pool = cs + [gs.gens["t1"], gs.gens["t2"]]
    names = gs.names
    for _ in range(100):
        w1 = " ".join(f"{rng.choice(names)}^{rng.choice([1, -1])}" for _ in range(rng.randint(1, 6)))
        w2 = " ".join(f"{rng.choice(names)}^{rng.choice([1, -1])}" for _ in range(rng.randint(1, 6)))
        f, h = gs.evaluate(w1), gs.evaluate(w2)
        lf, lh, lfh = ell_morphism(fam, f), ell_morphism(fam, h), ell_morphism(fam, f * h)
        if lf is None or lh is None or lfh is None or lfh[0] != lf[0] + lh[0]:
            return False, f"ell not additive on {w1} / {w2}"
        u = _random_product(rng, pool)
        v = _random_product(rng, pool)
        wu, wv = local_permutation(u, F(0), n), local_permutation(v, F(0), n)
        if wu is None or wv is None or local_permutation(u * v, F(0), n) != _compose(wu, wv):
            return False, "omega_0 not multiplicative"
    return True, ""


def _random_product(rng, pool):
    out = Iet.identity()
    for _ in range(rng.randint(1, 4)):
        x = rng.choice(pool)
        out = out * (x if rng.random() < 0.5 else x.inverse())
    return out


@_criterion(6, "break point dichotomy: rotations 2, G_n <= 2n, Keane growing", 60)
def test_c06_break_points():
    tr = bp_growth(rotation(A), 100)
    if any(c != 2 for c in tr.counts):
        return False, f"#BP(R_a^k) not always 2: {sorted(set(tr.counts))}"
    rng = random.Random(6)
    for _ in range(20):
        e = random_gn(rng)
        counts = bp_growth(e.embed(), 50).counts
        if max(counts) > 2 * e.n:
            return False, f"G_{e.n} element with {max(counts)} break points"
    counts = bp_growth(_keane_4iet(), 40).counts
    window = counts[9:40]
    if any(b <= a for a, b in zip(window, window[1:])):
        return False, f"Keane counts not strictly increasing: {window}"
    return True, f"Keane counts {window[0]}..{window[-1]}"


@_criterion(7, "rate invariance under conjugation at N = 200", 120)
def test_c07_rate_invariance():
    rng = random.Random(7)
    n = 200
    worst = F(0)
    for _ in range(50):
        f, g = random_iet(rng, 4), random_iet(rng, 3)
        x = random_point(rng)
        e1 = rate_estimate(f, x, n)
        e2 = rate_estimate(g * f * g.inverse(), g(x), n)
        bound = F(2 * len(g.break_points()), n)
        worst = max(worst, abs(e1 - e2))
        if abs(e1 - e2) > bound:
            return False, f"|{e1} - {e2}| > {bound}"
    return True, f"max difference {worst}"


def _random_rotation_product(rng, k, rational=False):
    """Up to k restricted rotations on disjoint intervals with rational ends."""
    grid = 12
    ends = sorted(rng.sample(range(grid + 1), 2 * k))
    items = []
    for i in range(k):
        a, b = F(ends[2 * i], grid), F(ends[2 * i + 1], grid)
        if rational:
            q = rng.randint(2, 7)
            ang = (b - a) * F(rng.randint(1, q - 1), q)
        else:
            ang = (b - a) * (A * rng.randint(1, 5) / 7)
        items.append((ang, (a, b)))
    return items


@_criterion(8, "PL normalization of 50 products of restricted rotations", 60)
def test_c08_pl_normalize():
    rng = random.Random(8)
    for _ in range(50):
        items = _random_rotation_product(rng, rng.randint(1, 4), rational=rng.random() < 0.2)
        f = product_of_restricted_rotations(items)
        nf = pl_normalize(f)
        if nf is None:
            return False, f"no normal form for {items}"
        if any(s != i for i, s in enumerate(nf.image.sigma)):
            return False, "Phi has a nontrivial block permutation"
        if nf.pl * f * nf.pl.inverse() != nf.image.embed():
            return False, f"P f P^-1 != embed(Phi) for {items}"
    return True, ""


@_criterion(9, "SAF invariance on 500 pairs; rational rotations 0; irrational nonzero", 60)
def test_c09_saf():
    rng = random.Random(9)
    for _ in range(500):
        fld = rng.choice([SQRT2, CUBIC])
        f, h = random_iet(rng, 4, fld), random_iet(rng, 4, fld)
        if saf_invariant(h * f * h.inverse(), fld.degree) != saf_invariant(f, fld.degree):
            return False, "SAF changed under conjugation"
    for q in range(2, 12):
        for p in range(1, q):
            if not saf_invariant(rotation(F(p, q))).is_zero():
                return False, f"SAF(R_{p}/{q}) != 0"
    for a in (A, A / 3, SQRT2.theta / 2, CUBIC.theta - 1):
        if saf_invariant(rotation(a)).is_zero():
            return False, f"SAF(R_{a}) == 0"
    return True, ""


@_criterion(10, "decomposition of constructed mixtures into periodic and minimal parts", 60)
def test_c10_decompose():
    rng = random.Random(10)
    for trial in range(40):
        k = rng.randint(1, 3)
        rational = trial % 2 == 1
        items = _random_rotation_product(rng, k, rational=False)
        periods = {}
        if rational:
            j = rng.randrange(k)
            ang, (a, b) = items[j]
            q = rng.randint(2, 6)
            items[j] = ((b - a) * F(rng.randint(1, q - 1), q), (a, b))
            periods[(a, b)] = (items[j][0] / (b - a)).denominator
        f = product_of_restricted_rotations(items)
        rep = decompose(f, 12)
        minimal = [IntervalSet([iv]) for _, iv in items if iv not in periods]
        if [s for s, _ in rep.minimal] != minimal:
            return False, f"minimal parts {rep.minimal} != {minimal}"
        if any(st != "certified" for _, st in rep.minimal):
            return False, "minimal part not Keane-certified"
        gaps = IntervalSet.unit().difference(IntervalSet([iv for _, iv in items]))
        fixed = IntervalSet([p for s, per in rep.periodic if per == 1 for p in s])
        if fixed != gaps:
            return False, f"fixed part {fixed} != gaps {gaps}"
        rot = [(s, per) for s, per in rep.periodic if per != 1]
        if rot != [(IntervalSet([iv]), q) for iv, q in periods.items()]:
            return False, f"periodic parts {rot} != {periods}"
        if rep.residual:
            return False, f"residual {rep.residual}"
    return True, ""


@_criterion(11, "wreath embedding for Z/2, Z/3, S_3: E identity and free up to 5", 120)
def test_c11_wreath():
    rng = random.Random(11)
    for gens in ([(1, 0)], [(1, 2, 0)], [(1, 0, 2), (1, 2, 0)]):
        emb = wreath_embedding([A], gens)
        for _ in range(30):
            x = ({s: rng.choice([A, 2 * A, F(1, 3), 0]) for s in emb.elements}, rng.choice(emb.elements))
            y = ({s: rng.choice([A / 2, F(1, 5), 0]) for s in emb.elements}, rng.choice(emb.elements))
            if emb.E(*x) * emb.E(*y) != emb.E(*emb.compose_data(x, y)):
                return False, f"E composition identity fails for F of order {emb.size}"
        rep = free_up_to(emb.gens, 5)
        if rep.free is not True:
            return False, f"F of order {emb.size}: {rep.verdict}"
    return True, ""


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c"):
            try:
                fn()
            except AssertionError:
                pass
