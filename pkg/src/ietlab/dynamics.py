"""Orbits, break-point growth, minimal/periodic decomposition, PL normal form.

Everything here is exact.  Quantities that are limits (the discontinuity
growth rate along an orbit) are reported as finite-depth values only.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .gn import GnElem, gn_recognize
from .iet import Iet
from .intervals import IntervalSet
from .numfield import q_linear_rank
from .plmap import PLMap

__all__ = [
    "ComponentReport",
    "GrowthTrace",
    "NormalForm",
    "Orbit",
    "PeriodicSearch",
    "bp_growth",
    "decompose",
    "first_return",
    "orbit",
    "periodic_points_up_to",
    "pl_normalize",
    "rate_count",
    "rate_estimate",
    "restricted_rotation_supports",
]

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# orbits and growth


@dataclass
class Orbit:
    points: list
    period: Optional[int] = None


def orbit(f: Iet, x, n: int) -> Orbit:
    """``[x, f(x), ..., f^n(x)]`` and the least period if the orbit closes."""
    if n < 0:
        raise ValueError("n must be >= 0")
    pts = [x]
    period = None
    y = x
    for k in range(1, n + 1):
        y = f(y)
        pts.append(y)
        if period is None and y == x:
            period = k
    return Orbit(pts, period)


@dataclass
class GrowthTrace:
    counts: list[int]
    verdict: str
    bound: Optional[int] = None

    def to_dict(self) -> dict:
        return {"counts": list(self.counts), "verdict": self.verdict, "bound": self.bound}


def bp_growth(f: Iet, n: int) -> GrowthTrace:
    """``#BP(f^k)`` for k = 1..n with a verdict over the last ceil(n/3) steps."""
    if n < 1:
        raise ValueError("n must be >= 1")
    counts = []
    g = f
    for k in range(1, n + 1):
        if k > 1:
            g = g * f
        counts.append(len(g.cuts))
    window = counts[-math.ceil(n / 3):]
    if len(set(window)) == 1:
        return GrowthTrace(counts, "bounded", window[0])
    if all(a < b for a, b in zip(window, window[1:])):
        return GrowthTrace(counts, "growing")
    return GrowthTrace(counts, "inconclusive")


def _two_sided_orbit(f: Iet, x, n: int) -> set:
    pts = {x}
    finv = f.inverse()
    y = z = x
    for _ in range(n):
        y = f(y)
        z = finv(z)
        pts.add(y)
        pts.add(z)
    return pts


def rate_count(f: Iet, x, n: int, fn: Iet | None = None) -> int:
    """``#(BP(f^n) & O)`` with O the orbit of x under f^j, |j| <= n."""
    if fn is None:
        fn = f**n
    return len(fn.break_points() & _two_sided_orbit(f, x, n))


def rate_estimate(f: Iet, x, n: int) -> Fraction:
    """Finite-depth value of the discontinuity growth rate along the orbit of x.

    The orbit is taken forwards and backwards to depth ``n``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(rate_count(f, x, n), n)


# ---------------------------------------------------------------------------
# first return maps


@dataclass
class FirstReturn:
    """Induced map on ``[a, b)`` as pieces ``(x0, x1, translation, return_time)``."""

    a: object
    b: object
    pieces: list
    floors: IntervalSet

    def induced(self) -> Iet:
        """The first-return map rescaled to an IET of [0, 1)."""
        width = self.b - self.a
        cuts = [(x0 - self.a) / width for x0, _, _, _ in self.pieces]
        trans = [t / width for _, _, t, _ in self.pieces]
        return Iet(cuts, trans)

    def canonical_lengths(self) -> list:
        f = self.induced()
        width = self.b - self.a
        return [x * width for x in f.lengths()]


def first_return(f: Iet, a, b, cap: int) -> FirstReturn | None:
    """First-return map of f to [a, b) by exact forward iteration.

    Returns ``None`` if some piece has not returned after ``cap`` steps.
    """
    active = [(a, b, ZERO)]
    done = []
    floors = [(a, b)]
    time = 0
    while active:
        time += 1
        if time > cap:
            return None
        nxt = []
        for x0, x1, off in active:
            for y0, y1, t in f.pieces(x0 + off, x1 + off):
                shift = off + t
                z0, z1 = y0 + t, y1 + t
                # split the image [z0, z1) against [a, b)
                cuts = [z0]
                if z0 < a < z1:
                    cuts.append(a)
                if z0 < b < z1:
                    cuts.append(b)
                cuts.append(z1)
                for w0, w1 in zip(cuts, cuts[1:]):
                    if a <= w0 and w1 <= b:
                        done.append((w0 - shift, w1 - shift, shift, time))
                    else:
                        nxt.append((w0 - shift, w1 - shift, shift))
                        floors.append((w0, w1))
        active = nxt
    done.sort(key=lambda p: p[0])
    return FirstReturn(a, b, done, IntervalSet(floors))


def _reducible_prefix(f: Iet):
    """Smallest proper prefix length of [0,1) mapped onto itself, else None."""
    perm = f.permutation()
    lengths = f.lengths()
    acc = ZERO
    for k in range(1, len(perm)):
        acc = acc + lengths[k - 1]
        if max(perm[:k]) == k - 1:
            return acc
    return None


# ---------------------------------------------------------------------------
# decomposition


@dataclass
class ComponentReport:
    periodic: list = field(default_factory=list)  # (IntervalSet, period)
    minimal: list = field(default_factory=list)  # (IntervalSet, status)
    residual: IntervalSet = field(default_factory=IntervalSet)
    orbit_convention: str = "forward"

    def components(self) -> list[IntervalSet]:
        return [c for c, _ in self.periodic] + [c for c, _ in self.minimal]

    def to_dict(self, fmt=str) -> dict:
        def iset(s):
            return [[fmt(a), fmt(b)] for a, b in s]

        return {
            "periodic": [{"set": iset(s), "period": p} for s, p in self.periodic],
            "minimal": [{"set": iset(s), "status": st} for s, st in self.minimal],
            "residual": iset(self.residual),
        }


def _periodic_components(f: Iet, region: IntervalSet, k: int) -> list[IntervalSet]:
    """Split a set of exact-period-k points into orbits of atoms."""
    seeds = [a for a, _ in region] + [c for c in f.cuts if c in region]
    cuts = set()
    for p in seeds:
        y = p
        for _ in range(k):
            cuts.add(y)
            y = f(y)
    cuts.update(b for _, b in region)
    pts = sorted(cuts)
    atoms = [(u, v) for u, v in zip(pts, pts[1:]) if u in region]
    starts = [u for u, _ in atoms]
    index = {u: i for i, u in enumerate(starts)}
    parent = list(range(len(atoms)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, (u, _) in enumerate(atoms):
        j = index[f(u)]
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    groups: dict[int, list] = {}
    for i, atom in enumerate(atoms):
        groups.setdefault(find(i), []).append(atom)
    comps = [IntervalSet(g) for g in groups.values()]
    comps.sort(key=lambda s: s.parts[0][0])
    return comps


def _invariant_blocks(f: Iet, rest: IntervalSet) -> list[IntervalSet]:
    """Coarse f-invariant pieces of ``rest`` from the atom graph."""
    pts = set(rest.endpoints())
    for c in f.cuts:
        if c in rest:
            pts.add(c)
    for a, t in zip(f.cuts, f.translations):
        y = a + t
        if y in rest:
            pts.add(y)
    pts = sorted(pts)
    atoms = [(u, v) for u, v in zip(pts, pts[1:]) if u in rest]
    if not atoms:
        return []
    starts = [u for u, _ in atoms]
    parent = list(range(len(atoms)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, (u, v) in enumerate(atoms):
        for y0, y1, t in f.pieces(u, v):
            lo, hi = y0 + t, y1 + t
            j = bisect_right(starts, lo) - 1
            while j < len(atoms) and atoms[j][0] < hi:
                if atoms[j][1] > lo:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
                j += 1
    groups: dict[int, list] = {}
    for i, atom in enumerate(atoms):
        groups.setdefault(find(i), []).append(atom)
    blocks = [IntervalSet(g) for g in groups.values()]
    blocks.sort(key=lambda s: s.parts[0][0])
    return blocks


def _is_rational(f: Iet) -> bool:
    return all(q_linear_rank([x, 1]) <= 1 for x in f.cuts + f.translations)


def keane_certificate(ret: FirstReturn) -> bool:
    """Rationally independent lengths and an irreducible permutation."""
    ind = ret.induced()
    if len(ind) < 2:
        return False
    if _reducible_prefix(ind) is not None:
        return False
    lengths = [x * (ret.b - ret.a) for x in ind.lengths()]
    return q_linear_rank(lengths) == len(lengths)


def decompose(f: Iet, depth: int, cap: int | None = None) -> ComponentReport:
    """Split [0, 1) into periodic and minimal f-components.

    Periodic components of period <= ``depth`` come from scanning
    ``Fix(f^k)``.  On the rest, invariant pieces are isolated through first
    return maps; a piece is certified minimal when its first-return map has
    rationally independent lengths and an irreducible permutation.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if cap is None:
        cap = 10 * len(f.cuts) ** 2 * depth
    report = ComponentReport()
    covered = IntervalSet()
    g = f
    for k in range(1, depth + 1):
        if k > 1:
            g = g * f
        per_k = g.fixed_set().difference(covered)
        if per_k:
            for comp in _periodic_components(f, per_k, k):
                report.periodic.append((comp, k))
            covered = covered.union(per_k)
        if covered == IntervalSet.unit():
            break

    rest = covered.complement()
    residual = []
    for block in _invariant_blocks(f, rest):
        todo = [block]
        while todo:
            w = todo.pop()
            a, b = w.parts[0]
            while True:
                ret = first_return(f, a, b, cap)
                if ret is None:
                    break
                ind = ret.induced()
                prefix = _reducible_prefix(ind) if len(ind) > 1 else None
                if prefix is None:
                    break
                b = a + prefix * (b - a)
            if ret is None:
                residual.append(w)
                continue
            orb = ret.floors
            if all(t == 0 for _, _, t, _ in ret.pieces):
                # periodic with period beyond the scanned depth
                by_time: dict[int, list] = {}
                for x0, x1, _, r in ret.pieces:
                    by_time.setdefault(r, []).append((x0, x1))
                for r, parts in sorted(by_time.items()):
                    base = IntervalSet(parts)
                    comp = base
                    h = f
                    for _ in range(1, r):
                        comp = comp.union(h.image(base))
                        h = h * f
                    report.periodic.append((comp, r))
            elif _is_rational(ret.induced()):
                # a rational IET is periodic, just not within the scanned depth
                residual.append(orb)
            else:
                status = "certified" if keane_certificate(ret) else f"heuristic({depth})"
                report.minimal.append((orb, status))
            remainder = w.difference(orb)
            if remainder:
                todo.append(remainder)
    report.residual = IntervalSet(p for s in residual for p in s)
    report.periodic.sort(key=lambda c: c[0].parts[0][0])
    report.minimal.sort(key=lambda c: c[0].parts[0][0])
    _check_report(f, report)
    return report


def _check_report(f: Iet, report: ComponentReport) -> None:
    union = IntervalSet(report.residual.parts)
    total = report.residual.measure()
    for comp in report.components():
        if f.image(comp) != comp:
            raise AssertionError(f"component {comp} is not invariant")
        union = union.union(comp)
        total = total + comp.measure()
    for comp, k in report.periodic:
        if not comp.issubset((f**k).fixed_set()):
            raise AssertionError(f"f^{k} is not the identity on {comp}")
    if union != IntervalSet.unit() or total != 1:
        raise AssertionError("components do not partition [0, 1)")


# ---------------------------------------------------------------------------
# periodic points


@dataclass
class PeriodicSearch:
    status: str  # "found" | "none_up_to" | "certified_none"
    period: Optional[int] = None
    points: Optional[IntervalSet] = None
    bound: Optional[int] = None
    reason: str = ""


def periodic_points_up_to(f: Iet, k_max: int) -> PeriodicSearch:
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    for n in range(1, max(len(f.cuts), 12) + 1):
        e = gn_recognize(n, f)
        if e is not None and e.periodic_point_free():
            return PeriodicSearch("certified_none", reason=f"element of G_{n} with irrational cycle sums")
    g = f
    for k in range(1, k_max + 1):
        if k > 1:
            g = g * f
        fix = g.fixed_set()
        if fix:
            return PeriodicSearch("found", period=k, points=fix)
    rep = decompose(f, k_max)
    if not rep.periodic and not rep.residual and all(st == "certified" for _, st in rep.minimal):
        return PeriodicSearch("certified_none", reason="every component has a Keane certificate")
    return PeriodicSearch("none_up_to", bound=k_max)


# ---------------------------------------------------------------------------
# PL normal form of products of restricted rotations


def restricted_rotation_supports(f: Iet) -> list[tuple] | None:
    """``[(angle, (a, b)), ...]`` if f is a product of restricted rotations, else None."""
    ivs = f.intervals()
    out = []
    i = 0
    while i < len(ivs):
        a, c1, t = ivs[i]
        if t == 0:
            i += 1
            continue
        if t < 0 or i + 1 >= len(ivs):
            return None
        _, b2, t2 = ivs[i + 1]
        if t2 != a - c1 or b2 != c1 + t:
            return None
        out.append((t, (a, b2)))
        i += 2
    return out


@dataclass
class NormalForm:
    pl: PLMap
    image: GnElem
    blocks: list  # the J_i, left to right


def pl_normalize(f: Iet) -> NormalForm | None:
    """PL map P and Phi in G_n with sigma = id such that P f P^-1 = Phi.

    ``f`` must be a product of restricted rotations with disjoint supports;
    otherwise ``None``.  The blocks J_i are the supports and the maximal
    fixed gaps between them, left to right, and P maps J_i affinely onto
    [(i-1)/n, i/n).
    """
    supports = restricted_rotation_supports(f)
    if supports is None:
        return None
    blocks, angles = [], []
    pos = ZERO
    for angle, (a, b) in supports:
        if a > pos:
            blocks.append((pos, a))
            angles.append(ZERO)
        blocks.append((a, b))
        angles.append(angle)
        pos = b
    if pos < 1:
        blocks.append((pos, ONE))
        angles.append(ZERO)
    n = len(blocks)
    target = [(Fraction(i, n), Fraction(i + 1, n)) for i in range(n)]
    pl = PLMap.from_blocks(blocks, target)
    alpha = [ang * Fraction(1, n) / (b - a) for ang, (a, b) in zip(angles, blocks)]
    phi = GnElem(n, alpha)
    if pl * f * pl.inverse() != PLMap.from_iet(phi.embed()):
        raise AssertionError("normal form check failed")
    return NormalForm(pl, phi, blocks)
