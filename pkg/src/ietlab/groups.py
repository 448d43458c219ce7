"""Finitely generated groups of IETs: words, relations, freeness, balls.

Also the explicit families used as witnesses: the Baumslag-Solitar pair
BS(1,-1), the crystallographic pair, the metabelian group generated by a
rotation and an involution of thirds, and the rotation-plus-alternating
group, together with the morphism ``ell`` and local permutations.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from .gn import GnElem
from .iet import Iet, rotation
from .intervals import IntervalSet
from .numfield import AlgebraicNumber, NumberField, q_linear_rank, to_fraction_vector
from .perm import from_cycles, generate_group, perm_compose, perm_identity, perm_inverse
from .rewriting import RewritingSystem, knuth_bendix

__all__ = [
    "ConstraintError",
    "Family",
    "FreeReport",
    "GeneratorSet",
    "RelationResult",
    "Word",
    "WreathEmbedding",
    "alternating_generators",
    "ball_growth",
    "builtin",
    "commutator",
    "commute_check",
    "commuting_power",
    "ell_morphism",
    "free_up_to",
    "local_permutation",
    "relation_check",
    "word_evaluate",
    "wreath_embedding",
]


class ConstraintError(ValueError):
    """Parameters violate a constraint of a built-in family."""


# ---------------------------------------------------------------------------
# words

_WORD_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)(?:\s*\^\s*(-?\d+))?")


class Word:
    """Freely reduced word: a tuple of ``(name, exponent)`` with nonzero exponents."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[tuple[str, int]] = ()):
        out: list[list] = []
        for name, e in letters:
            e = int(e)
            if e == 0:
                continue
            if out and out[-1][0] == name:
                out[-1][1] += e
                if out[-1][1] == 0:
                    out.pop()
            else:
                out.append([name, e])
        self.letters = tuple((n, e) for n, e in out)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """``"b a b^-1 a^-1"``; ``"1"`` or an empty string is the empty word."""
        text = text.strip()
        if text in ("", "1", "id"):
            return cls()
        pos, letters = 0, []
        while pos < len(text):
            m = _WORD_TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse word {text!r} at column {pos + 1}")
            letters.append((m.group(1), int(m.group(2) or 1)))
            pos = m.end()
            while pos < len(text) and text[pos].isspace():
                pos += 1
        return cls(letters)

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word((n, -e) for n, e in reversed(self.letters))

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        return Word(base.letters * abs(k))

    def names(self) -> set[str]:
        return {n for n, _ in self.letters}

    def syllables(self) -> list[tuple[str, int]]:
        """Unit steps ``(name, +1 or -1)``."""
        out = []
        for n, e in self.letters:
            out.extend([(n, 1 if e > 0 else -1)] * abs(e))
        return out

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(n if e == 1 else f"{n}^{e}" for n, e in self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"


def _as_word(w) -> Word:
    return w if isinstance(w, Word) else Word.parse(w)


# ---------------------------------------------------------------------------
# generator sets


@dataclass
class GeneratorSet:
    """Named generator IETs and optional relations ``lhs = rhs``."""

    gens: dict
    relations: list = field(default_factory=list)  # (Word, Word)
    name: str = ""
    params: dict = field(default_factory=dict)
    family: Optional["Family"] = None
    gn: dict = field(default_factory=dict)  # name -> GnElem when known

    def __post_init__(self):
        self.gens = dict(self.gens)
        for n in self.gens:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", n):
                raise ValueError(f"invalid generator name {n!r}")
        rels = []
        for r in self.relations:
            lhs, rhs = (r, Word()) if not isinstance(r, tuple) else r
            lhs, rhs = _as_word(lhs), _as_word(rhs)
            unknown = (lhs.names() | rhs.names()) - set(self.gens)
            if unknown:
                raise ValueError(f"relation uses undeclared generators {sorted(unknown)}")
            rels.append((lhs, rhs))
        self.relations = rels

    @property
    def names(self) -> list[str]:
        return list(self.gens)

    def relators(self) -> list[Word]:
        return [lhs * rhs.inverse() for lhs, rhs in self.relations]

    def evaluate(self, w) -> Iet:
        return word_evaluate(self, w)

    @cached_property
    def rewriting(self) -> RewritingSystem | None:
        if not self.relations:
            return None
        return knuth_bendix(len(self.gens), [self._letters(r) for r in self.relators()], max_rules=150, max_len=20)

    def _letters(self, w: Word) -> tuple[int, ...]:
        index = {n: i for i, n in enumerate(self.gens)}
        return tuple(2 * index[n] + (0 if s > 0 else 1) for n, s in w.syllables())

    def certify_trivial(self, w: Word) -> bool | None:
        """True if w = 1 follows from the relations; False if provably not; None if unknown."""
        if not w:
            return True
        rs = self.rewriting
        if rs is None:
            return False  # free group on the generators
        if rs.reduce(self._letters(w)) == ():
            return True
        return False if rs.complete else None


def word_evaluate(gens: GeneratorSet, w) -> Iet:
    """Product of the generators in written order (the rightmost acts first)."""
    w = _as_word(w)
    result = Iet.identity()
    for name, e in w.letters:
        if name not in gens.gens:
            raise KeyError(f"undeclared generator {name!r}")
        result = result * (gens.gens[name] ** e)
    return result


@dataclass
class RelationResult:
    lhs: Word
    rhs: Word
    holds: bool
    witness: object = None  # x with lhs(x) != rhs(x)

    def __str__(self):
        rel = f"{self.lhs} = {self.rhs}"
        if self.holds:
            return f"{rel}: holds"
        return f"{rel}: FAILS at x = {self.witness}"


def relation_check(gens: GeneratorSet) -> list[RelationResult]:
    if not gens.relations:
        raise ValueError("generator set has no relations to check")
    out = []
    for lhs, rhs in gens.relations:
        f, g = word_evaluate(gens, lhs), word_evaluate(gens, rhs)
        if f == g:
            out.append(RelationResult(lhs, rhs, True))
        else:
            d = g.inverse() * f
            x = d.support().parts[0][0]
            out.append(RelationResult(lhs, rhs, False, x))
    return out


# ---------------------------------------------------------------------------
# enumeration


def _steps(gens: GeneratorSet):
    out = []
    for n, f in gens.gens.items():
        out.append((n, 1, f))
        out.append((n, -1, f.inverse()))
    return out


def _bfs(gens: GeneratorSet, length: int):
    """Yield ``(level, word, element, previous_word_or_None)`` breadth first.

    ``previous`` is set when the element was already reached by a shorter or
    earlier word (a collision); such words are not expanded.
    """
    steps = _steps(gens)
    ident = Iet.identity()
    seen = {ident: Word()}
    frontier = [(Word(), ident)]
    yield 0, Word(), ident, None
    for level in range(1, length + 1):
        nxt = []
        for w, f in frontier:
            last = w.letters[-1] if w.letters else None
            for n, s, g in steps:
                if last is not None and last[0] == n and (last[1] > 0) != (s > 0):
                    continue
                v = Word(w.letters + ((n, s),))
                h = f * g
                if h in seen:
                    yield level, v, h, seen[h]
                    continue
                seen[h] = v
                nxt.append((v, h))
                yield level, v, h, None
        frontier = nxt


def ball_growth(gens: GeneratorSet, length: int) -> list[int]:
    """``[#B(1), ..., #B(L)]`` counting distinct IETs."""
    if length < 1:
        raise ValueError("length must be >= 1")
    sizes = [1] + [0] * length
    for level, _, _, prev in _bfs(gens, length):
        if prev is None and level:
            sizes[level] += 1
    for k in range(1, length + 1):
        sizes[k] += sizes[k - 1]
    return sizes[1:]


@dataclass
class FreeReport:
    length: int
    free: Optional[bool]  # None: undecided (relations could not settle a word)
    elements: int
    violation: Optional[Word] = None
    fixed_set: Optional[IntervalSet] = None
    reason: str = ""
    periodic_checked: bool = False

    @property
    def verdict(self) -> str:
        if self.free:
            return f"free-up-to-{self.length}"
        if self.free is None:
            return f"undecided ({self.reason})"
        return f"violation at {self.violation}"

    def to_dict(self, fmt=str) -> dict:
        out = {"length": self.length, "verdict": self.verdict, "elements": self.elements}
        if self.violation is not None:
            out["violation"] = str(self.violation)
            out["fixed_set"] = [[fmt(a), fmt(b)] for a, b in self.fixed_set]
            out["reason"] = self.reason
        return out


def free_up_to(gens: GeneratorSet, length: int, periodic: int = 0) -> FreeReport:
    """Check that no nontrivial element of word length <= L has a fixed point.

    Elements are deduplicated by exact IET equality.  When two words give the
    same IET, their quotient acts as the identity; it is a violation unless
    the relations prove it trivial.  With ``periodic > 0`` every element is
    additionally searched for periodic points up to that period.
    """
    from .dynamics import periodic_points_up_to

    if length < 1:
        raise ValueError("length must be >= 1")
    count = 0
    undecided = None
    for _, w, f, prev in _bfs(gens, length):
        if prev is not None:
            r = w * prev.inverse()
            if r.letters and r.letters[0][1] < 0:
                r = r.inverse()
            status = gens.certify_trivial(r)
            if status is False:
                return FreeReport(length, False, count, r, IntervalSet.unit(),
                                  "nontrivial word acts as the identity")
            if status is None and undecided is None:
                undecided = r
            continue
        count += 1
        if not w:
            continue
        fix = f.fixed_set()
        if fix:
            return FreeReport(length, False, count, w, fix, "element has fixed points")
        if periodic:
            res = periodic_points_up_to(f, periodic)
            if res.status == "found":
                return FreeReport(length, False, count, w ** res.period, res.points,
                                  f"periodic points of period {res.period}", True)
    if undecided is not None:
        return FreeReport(length, None, count, reason=f"could not decide whether {undecided} is trivial")
    return FreeReport(length, True, count, periodic_checked=bool(periodic))


def commutator(f: Iet, g: Iet) -> Iet:
    """``[f, g] = f g f^-1 g^-1``."""
    return f * g * f.inverse() * g.inverse()


def commute_check(f: Iet, g: Iet) -> bool:
    return f * g == g * f


def commuting_power(f: Iet, h: Iet, cap: int = 100) -> int | None:
    """Least p in 1..cap with f^p commuting with h."""
    fp = f
    for p in range(1, cap + 1):
        if commute_check(fp, h):
            return p
        fp = fp * f
    return None


# ---------------------------------------------------------------------------
# wreath products: A^F x| F inside G_#F


@dataclass
class WreathEmbedding:
    """The map E((a_s), sigma): (x, s) -> (a_s(x), sigma s) with A a group of rotations.

    ``elements`` lists F; block i of [0, 1) is the copy of [0, 1) indexed by
    ``elements[i]``.
    """

    elements: list
    angles: list
    gens: GeneratorSet

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, s) -> int:
        return self.elements.index(tuple(s))

    def E(self, rot: Mapping, sigma) -> GnElem:
        """``rot[s]`` is the rotation angle of a_s (missing entries are 0)."""
        m = self.size
        alpha = [Fraction(0)] * m
        perm = [0] * m
        for i, s in enumerate(self.elements):
            a = rot.get(s, Fraction(0))
            alpha[i] = (a - math.floor(a)) * Fraction(1, m)
            perm[i] = self.index(perm_compose(tuple(sigma), s))
        return GnElem(m, alpha, perm)

    def compose_data(self, x: tuple, y: tuple) -> tuple:
        """Group law of A^F x| F on ``(rot, sigma)`` pairs: (a_{sigma' s} + a'_s, sigma sigma')."""
        (rot, sigma), (rot2, sigma2) = x, y
        out = {}
        for s in self.elements:
            out[s] = rot.get(perm_compose(tuple(sigma2), s), Fraction(0)) + rot2.get(s, Fraction(0))
        return out, perm_compose(tuple(sigma), tuple(sigma2))


def _schreier_relators(gen_perms: list, elements: set) -> list[Word]:
    """A presentation of the permutation group from its Cayley graph."""
    names = [f"s{i + 1}" for i in range(len(gen_perms))]
    n = len(gen_perms[0])
    ident = perm_identity(n)
    tree = {ident: Word()}
    frontier = [ident]
    rels = []
    while frontier:
        nxt = []
        for g in frontier:
            for name, p in zip(names, gen_perms):
                h = perm_compose(g, p)
                w = tree[g] * Word([(name, 1)])
                if h in tree:
                    r = w * tree[h].inverse()
                    if r:
                        rels.append(r)
                else:
                    tree[h] = w
                    nxt.append(h)
        frontier = nxt
    return rels


def wreath_embedding(angles: Sequence, generators: Sequence[Sequence[int]]) -> WreathEmbedding:
    """Free action of Z^m x F inside A^F x| F, realised in G_#F.

    ``angles`` are rotation numbers (1 and the angles must be Q-independent)
    and ``generators`` generate the finite permutation group F (0-based image
    tuples).  The generators returned are the diagonal rotations
    E((R_a)_s, id) and the left translations E(id, s) for s among the
    generators of F; relations are the commutators between the two kinds and
    a presentation of F.
    """
    angles = list(angles)
    if not angles:
        raise ValueError("need at least one rotation angle")
    if q_linear_rank([1] + angles) != len(angles) + 1:
        raise ConstraintError("independence constraint violated: 1 and the angles must be Q-independent")
    gen_perms = [tuple(g) for g in generators]
    if not gen_perms:
        raise ConstraintError("F is trivial")
    elements = sorted(generate_group(gen_perms))
    if len(elements) < 2:
        raise ConstraintError("F is trivial")
    gens, gn = {}, {}
    emb = WreathEmbedding(elements, angles, None)
    for j, a in enumerate(angles):
        e = emb.E({s: a for s in elements}, perm_identity(len(gen_perms[0])))
        gn[f"r{j + 1}"] = e
    for i, p in enumerate(gen_perms):
        gn[f"s{i + 1}"] = emb.E({}, p)
    gens = {k: v.embed() for k, v in gn.items()}
    rels = []
    rnames = [f"r{j + 1}" for j in range(len(angles))]
    snames = [f"s{i + 1}" for i in range(len(gen_perms))]
    for i, x in enumerate(rnames):
        for y in rnames[i + 1:] + snames:
            rels.append(Word.parse(f"{x} {y} {x}^-1 {y}^-1"))
    rels.extend(_schreier_relators(gen_perms, set(elements)))
    emb.gens = GeneratorSet(gens, rels, name="wreath", gn=gn)
    return emb


# ---------------------------------------------------------------------------
# the families with a morphism ell


@dataclass(frozen=True)
class Family:
    """Groups whose translations all have the form ell*alpha + p/denominator."""

    denominator: int
    alpha: object
    name: str = ""


def metabelian_family(alpha) -> Family:
    return Family(3, alpha, "metabelian3")


def alternating_family(n: int, alpha) -> Family:
    return Family(n, alpha, f"alternating{n}")


def _degree(*values) -> int:
    for v in values:
        if isinstance(v, AlgebraicNumber):
            return v.field.degree
    return 1


def ell_morphism(family: Family, f: Iet) -> tuple[int, list] | None:
    """``(ell(f), [(a, b, p), ...])`` with f(x) = x + ell*alpha + p/denominator on [a, b).

    ``None`` if some translation is not of that form with a common ell.
    """
    alpha = family.alpha
    d = _degree(alpha, *f.translations)
    av = to_fraction_vector(alpha, d)
    j = next((i for i in range(1, d) if av[i] != 0), None)
    if j is None:
        raise ValueError("family angle must be irrational")
    ell = None
    table = []
    for a, b, t in f.intervals():
        tv = to_fraction_vector(t, d)
        q = tv[j] / av[j]
        if q.denominator != 1 or (ell is not None and q != ell):
            return None
        ell = int(q)
        rest = [x - ell * y for x, y in zip(tv, av)]
        if any(rest[1:]):
            return None
        p = rest[0] * family.denominator
        if p.denominator != 1:
            return None
        table.append((a, b, int(p)))
    return ell, table


def local_permutation(f: Iet, x, n: int) -> tuple[int, ...] | None:
    """omega with f(J_p) = J_omega(p), J_p = [x + p/n, x + p/n + beta) (0-based p).

    ``None`` when some translation of f is not in (1/n)Z.
    """
    if not (0 <= x < Fraction(1, n)):
        raise ValueError(f"x must lie in [0, 1/{n})")
    d = _degree(x, *f.translations)
    for t in f.translations:
        v = to_fraction_vector(t, d)
        if any(v[1:]) or (v[0] * n).denominator != 1:
            return None
    starts = [x + Fraction(p, n) for p in range(n)]
    gap = Fraction(1, n)
    for s in starts:
        for c in f.cuts:
            if c > s and c - s < gap:
                gap = c - s
    beta = gap / 2
    omega = []
    for s in starts:
        y = f(s)
        q = (y - x) * n
        q = to_fraction_vector(q, d)[0]
        if q.denominator != 1 or f(s + beta / 2) - (s + beta / 2) != y - s:
            return None
        omega.append(int(q))
    return tuple(omega)


# ---------------------------------------------------------------------------
# built-in generator sets


def _check_independent(values, names):
    if q_linear_rank([1] + list(values)) != len(values) + 1:
        raise ConstraintError(f"independence constraint violated: 1, {', '.join(names)} must be Q-independent")


def _check_range(value, lo, hi, name, closed_lo=False):
    ok = (value >= lo if closed_lo else value > lo) and value < hi
    if not ok:
        br = "[" if closed_lo else "("
        raise ConstraintError(f"interval constraint violated: {name} = {value} not in {br}{lo}, {hi})")


def _param(field: NumberField, params: Mapping, name: str, default: str):
    from .numfield import parse_number

    v = params.get(name, default)
    if isinstance(v, str):
        v = parse_number(v, field)
    return field(v) if not isinstance(v, AlgebraicNumber) else v


def alternating_generators(n: int) -> list[tuple[int, ...]]:
    """Two generators of A_n (0-based image tuples), n >= 3."""
    if n < 3:
        raise ValueError("A_n needs n >= 3")
    c3 = from_cycles(n, [0, 1, 2])
    if n % 2:
        other = from_cycles(n, list(range(n)))
    else:
        other = from_cycles(n, list(range(1, n)))
    return [c3, other]


DEFAULT_FIELDS = {
    "bs11": "quartic2",
    "crystallographic": "cubic2",
    "metabelian3": "sqrt2",
    "alternating": "sqrt2",
}


def builtin(name: str, field: NumberField, params: Mapping | None = None) -> GeneratorSet:
    """Generator sets of the explicit examples.

    ``bs11``: a = ((alpha, -alpha), id), b = ((beta1, beta2), (1 2)) in G_2.
    ``crystallographic``: two elements of G_4 with a^2 and b^2 inverted
    under conjugation by the other generator.
    ``metabelian3``: R_alpha and the involution g of G_3 swapping the outer
    thirds.  ``alternatingN`` (or ``alternating`` with ``n``): R_alpha and
    the block permutations t_a for two generators a of A_n.
    """
    params = dict(params or {})
    m = re.fullmatch(r"alternating(\d*)", name)
    if name == "bs11":
        al = _param(field, params, "alpha", "t/4")
        b1 = _param(field, params, "beta1", "t^2/4")
        b2 = _param(field, params, "beta2", "t^3/4")
        _check_independent([al, b1, b2], ["alpha", "beta1", "beta2"])
        for v, nm in ((al, "alpha"), (b1, "beta1"), (b2, "beta2")):
            _check_range(v, 0, Fraction(1, 2), nm)
        a = GnElem(2, [al, -al])
        b = GnElem(2, [b1, b2], [1, 0])
        return GeneratorSet(
            {"a": a.embed(), "b": b.embed()},
            [("b a b^-1", "a^-1")],
            name="bs11",
            params={"alpha": al, "beta1": b1, "beta2": b2},
            gn={"a": a, "b": b},
        )
    if name == "crystallographic":
        al = _param(field, params, "alpha", "t/8")
        be = _param(field, params, "beta", "t^2/8")
        _check_independent([al, be], ["alpha", "beta"])
        _check_range(al, 0, Fraction(1, 4), "alpha")
        _check_range(be, 0, Fraction(1, 4), "beta")
        a = GnElem(4, [0, al, -al, 0], from_cycles(4, [1, 3], [0, 2]))
        b = GnElem(4, [be, 0, -be, 0], from_cycles(4, [1, 2], [0, 3]))
        return GeneratorSet(
            {"a": a.embed(), "b": b.embed()},
            [("b a^2 b^-1", "a^-2"), ("a b^2 a^-1", "b^-2")],
            name="crystallographic",
            params={"alpha": al, "beta": be},
            gn={"a": a, "b": b},
        )
    if name == "metabelian3":
        al = _param(field, params, "alpha", "(t-1)/3")
        _check_independent([al], ["alpha"])
        _check_range(al, 0, Fraction(1, 3), "alpha")
        g = GnElem.permutation([2, 1, 0])
        return GeneratorSet(
            {"r": rotation(al), "g": g.embed()},
            [("g^2", "1")],
            name="metabelian3",
            params={"alpha": al},
            family=metabelian_family(al),
            gn={"g": g},
        )
    if m:
        n = int(m.group(1) or params.pop("n", 5))
        if n < 3:
            raise ConstraintError("interval constraint violated: n must be >= 3")
        al = _param(field, params, "alpha", f"(t-1)/{n}")
        _check_independent([al], ["alpha"])
        _check_range(al, 0, Fraction(1, n), "alpha")
        gens = {"r": rotation(al)}
        gn = {}
        for i, p in enumerate(alternating_generators(n)):
            e = GnElem.permutation(p)
            gens[f"t{i + 1}"] = e.embed()
            gn[f"t{i + 1}"] = e
        return GeneratorSet(
            gens,
            [],
            name=f"alternating{n}",
            params={"alpha": al, "n": n},
            family=alternating_family(n, al),
            gn=gn,
        )
    raise ValueError(f"unknown built-in {name!r}; choose from bs11, crystallographic, metabelian3, alternating<n>")
