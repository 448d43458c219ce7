"""Exact arithmetic in a real number field Q(t).

A field is given by a monic irreducible polynomial with rational
coefficients and a rational interval isolating one real root ``t``.
Elements are stored as an integer coefficient vector over the power basis
``1, t, ..., t^(d-1)`` together with a positive common denominator, so
equality is structural.  Signs are decided exactly: the root is enclosed in
a dyadic interval which is refined until the enclosure of the element
excludes zero (it always does eventually, because a nonzero element of the
field has a nonzero real value).

Example::

    >>> K = preset("sqrt2")
    >>> t = K.theta
    >>> t * t == 2
    True
    >>> 3 * t > 4
    True
    >>> floor_frac(-t)
    (-2, -t + 2)
"""

from __future__ import annotations

import functools
import logging
import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

log = logging.getLogger(__name__)

__all__ = [
    "AlgebraicNumber",
    "FieldError",
    "FieldMismatchError",
    "NumberField",
    "PRESETS",
    "ParseError",
    "floor_frac",
    "parse_number",
    "preset",
    "q_linear_rank",
    "to_fraction_vector",
]


class FieldError(ValueError):
    """Invalid field data (non-monic, reducible, bad isolating interval)."""


class FieldMismatchError(ValueError):
    """Operands live in different number fields."""


# ---------------------------------------------------------------------------
# small polynomial helpers over Q (coefficients in ascending order)

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _peval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _pderiv(p):
    return [i * p[i] for i in range(1, len(p))]


def _pdivmod(a, b):
    a = [Fraction(c) for c in a]
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    a = _trim(a)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        coef = a[-1] / lead
        q[shift] = coef
        for i, c in enumerate(b):
            a[i + shift] -= coef * c
        a = _trim(a)
    return _trim(q), a


def _psub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pgcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    return a


def _sturm_count(p, lo, hi):
    """Number of distinct real roots of square-free ``p`` in (lo, hi]."""
    seq = [_trim(p), _trim(_pderiv(p))]
    while seq[-1] and len(seq[-1]) > 1:
        _, r = _pdivmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])

    def changes(x):
        signs = [s for s in (_peval(q, x) for q in seq if q) if s != 0]
        return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))

    return changes(lo) - changes(hi)


def _int_divisors(n, limit=10**12):
    n = abs(n)
    if n > limit:
        return None
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _is_irreducible(poly):
    """Irreducibility over Q for degree <= 4; ``None`` when not decided."""
    d = len(poly) - 1
    if d == 1:
        return True
    if d > 4:
        return None
    scale = 1
    for c in poly:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    q = [int(poly[i] * scale ** (d - i)) for i in range(d + 1)]
    if q[0] == 0:
        return False
    divs = _int_divisors(q[0])
    if divs is None:
        return None
    for r in divs:
        for cand in (r, -r):
            if sum(c * cand**i for i, c in enumerate(q)) == 0:
                return False
    if d < 4:
        return True
    # monic quartic: look for (y^2 + a y + b)(y^2 + c y + e)
    q0, q1, q2, q3 = q[0], q[1], q[2], q[3]
    for r in divs:
        for b in (r, -r):
            e = q0 // b
            s = q2 - b - e
            disc = q3 * q3 - 4 * s
            if disc < 0:
                continue
            root = math.isqrt(disc)
            if root * root != disc:
                continue
            for a2 in (q3 + root, q3 - root):
                if a2 % 2:
                    continue
                a = a2 // 2
                c = q3 - a
                if a * e + b * c == q1:
                    return False
    return True


# ---------------------------------------------------------------------------

Number = Union[int, Fraction, "AlgebraicNumber"]


class NumberField:
    """The real field Q(t) with t the unique root of ``minpoly`` in (lo, hi).

    ``minpoly`` lists rational coefficients in ascending order and must be
    monic.  Degree 1 is plain rational arithmetic.
    """

    def __init__(self, minpoly: Sequence, interval: Sequence, name: str | None = None):
        poly = [Fraction(c) for c in minpoly]
        poly = _trim(poly)
        if len(poly) < 2:
            raise FieldError("minimal polynomial must have degree >= 1")
        if poly[-1] != 1:
            raise FieldError("minimal polynomial must be monic")
        lo, hi = (Fraction(v) for v in interval)
        if not lo < hi:
            raise FieldError("isolating interval must satisfy lo < hi")
        if _peval(poly, lo) == 0 or _peval(poly, hi) == 0:
            raise FieldError("isolating interval endpoint is a root")
        if len(_pgcd(poly, _pderiv(poly))) > 1:
            raise FieldError("minimal polynomial is not square-free")
        count = _sturm_count(poly, lo, hi)
        if count != 1:
            raise FieldError(f"isolating interval contains {count} roots, expected exactly 1")
        verdict = _is_irreducible(poly)
        if verdict is False:
            raise FieldError("minimal polynomial is reducible over Q")
        if verdict is None:
            log.warning("irreducibility of degree-%d polynomial not checked", len(poly) - 1)

        self.minpoly = tuple(poly)
        self.interval = (lo, hi)
        self.degree = d = len(poly) - 1
        self.name = name
        self._key = (self.minpoly, self.interval)

        # t^k mod minpoly for k = d .. 2d-2, over a common denominator
        reds = []
        cur_full = [-c for c in poly[:-1]]  # t^d
        for _ in range(d, 2 * d - 1):
            reds.append(list(cur_full))
            # multiply by t
            top = cur_full[-1]
            cur_full = [Fraction(0)] + cur_full[:-1]
            cur_full = [cur_full[i] - top * poly[i] for i in range(d)]
        den = 1
        for r in reds:
            for c in r:
                den = den * c.denominator // math.gcd(den, c.denominator)
        self._red_den = den
        self._red = [tuple(int(c * den) for c in r) for r in reds]

        self._bracket = (lo, hi)
        self._enc_cache: dict[int, tuple] = {}
        if d == 1:
            self._exact_root = -poly[0]

    # -- identity -----------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, NumberField) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.name:
            return f"NumberField({self.name!r})"
        return f"NumberField(minpoly={[str(c) for c in self.minpoly]}, interval={[str(c) for c in self.interval]})"

    # -- constructors -------------------------------------------------------
    @property
    def theta(self) -> "AlgebraicNumber":
        if self.degree == 1:
            r = self._exact_root
            return AlgebraicNumber._make(self, (r.numerator,), r.denominator)
        return AlgebraicNumber._make(self, (0, 1) + (0,) * (self.degree - 2), 1)

    @property
    def zero(self) -> "AlgebraicNumber":
        return AlgebraicNumber._make(self, (0,) * self.degree, 1)

    @property
    def one(self) -> "AlgebraicNumber":
        return self(1)

    def __call__(self, value) -> "AlgebraicNumber":
        """Coerce ``value`` (number, coefficient list, or expression string)."""
        if isinstance(value, AlgebraicNumber):
            if value.field != self:
                raise FieldMismatchError("number belongs to another field")
            return value
        if isinstance(value, str):
            return self(parse_number(value, self))
        if isinstance(value, (int, Fraction)) or isinstance(value, Rational):
            q = Fraction(value)
            return AlgebraicNumber._make(self, (q.numerator,) + (0,) * (self.degree - 1), q.denominator)
        coeffs = [Fraction(c) for c in value]
        if len(coeffs) > self.degree:
            raise ValueError(f"too many coefficients for a degree-{self.degree} field")
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return AlgebraicNumber._make(self, tuple(int(c * den) for c in coeffs), den)

    # -- root enclosure -----------------------------------------------------
    def _refine_bracket(self, width: Fraction):
        lo, hi = self._bracket
        poly = self.minpoly
        slo = _peval(poly, lo) > 0
        while hi - lo > width:
            mid = (lo + hi) / 2
            v = _peval(poly, mid)
            if v == 0:  # only possible for degree 1
                lo = hi = mid
                break
            if (v > 0) == slo:
                lo = mid
            else:
                hi = mid
        self._bracket = (lo, hi)
        return lo, hi

    def _powers(self, k: int):
        """Integer bounds (L_i, U_i) with L_i <= 2^k t^i <= U_i, i < degree."""
        enc = self._enc_cache.get(k)
        if enc is not None:
            return enc
        d = self.degree
        scale = 1 << k
        if d == 1:
            enc = ((scale, scale),)
            self._enc_cache[k] = enc
            return enc
        lo, hi = self._bracket
        mag = max(abs(lo), abs(hi), Fraction(1))
        guard = 4 + d * (math.ceil(mag).bit_length() + 1)
        lo, hi = self._refine_bracket(Fraction(1, 1 << (k + guard)))
        out = [(scale, scale)]
        plo, phi = Fraction(1), Fraction(1)
        for _ in range(1, d):
            cands = (plo * lo, plo * hi, phi * lo, phi * hi)
            plo, phi = min(cands), max(cands)
            out.append((math.floor(plo * scale), math.ceil(phi * scale)))
        enc = tuple(out)
        self._enc_cache[k] = enc
        return enc

    def _sign(self, num: tuple) -> int:
        nz = [i for i, c in enumerate(num) if c]
        if not nz:
            return 0
        if nz == [0]:
            return 1 if num[0] > 0 else -1
        k = 64
        while True:
            enc = self._powers(k)
            low = high = 0
            for c, (L, U) in zip(num, enc):
                if c > 0:
                    low += c * L
                    high += c * U
                elif c < 0:
                    low += c * U
                    high += c * L
            if low > 0:
                return 1
            if high < 0:
                return -1
            k *= 2

    def _enclose(self, num: tuple, den: int, k: int) -> tuple[Fraction, Fraction]:
        enc = self._powers(k)
        low = high = 0
        for c, (L, U) in zip(num, enc):
            if c >= 0:
                low += c * L
                high += c * U
            else:
                low += c * U
                high += c * L
        scale = den << k
        return Fraction(low, scale), Fraction(high, scale)

    # -- reduction ----------------------------------------------------------
    def _mulvec(self, a: tuple, b: tuple) -> tuple[tuple, int]:
        d = self.degree
        if d == 1:
            return (a[0] * b[0],), 1
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        D = self._red_den
        out = [D * c for c in prod[:d]]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                for i, r in enumerate(self._red[k - d]):
                    out[i] += c * r
        return tuple(out), D


class AlgebraicNumber:
    """Element of a :class:`NumberField`; immutable and hashable."""

    __slots__ = ("field", "_num", "_den")

    def __init__(self, field: NumberField, coeffs: Sequence):
        other = field(list(coeffs))
        self.field = field
        self._num = other._num
        self._den = other._den

    @classmethod
    def _make(cls, field, num, den):
        if den < 0:
            num = tuple(-c for c in num)
            den = -den
        g = math.gcd(den, *num)
        if g > 1:
            num = tuple(c // g for c in num)
            den //= g
        obj = object.__new__(cls)
        obj.field = field
        obj._num = num
        obj._den = den
        return obj

    # -- coercion -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError("operands belong to different fields")
            return other
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return AlgebraicNumber._make(self.field, (q.numerator,) + (0,) * (self.field.degree - 1), q.denominator)
        return NotImplemented

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self._num[0], self._den)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        da, db = self._den, o._den
        return AlgebraicNumber._make(self.field, tuple(x * db + y * da for x, y in zip(self._num, o._num)), da * db)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber._make(self.field, tuple(-x for x in self._num), self._den)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        da, db = self._den, o._den
        return AlgebraicNumber._make(self.field, tuple(x * db - y * da for x, y in zip(self._num, o._num)), da * db)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return AlgebraicNumber._make(self.field, tuple(x * q.numerator for x in self._num), self._den * q.denominator)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        num, D = self.field._mulvec(self._num, o._num)
        return AlgebraicNumber._make(self.field, num, self._den * o._den * D)

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicNumber":
        if not any(self._num):
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return AlgebraicNumber._make(self.field, (self._den,) + (0,) * (self.field.degree - 1), self._num[0])
        # extended Euclid: s*a + u*m = 1
        m = list(self.field.minpoly)
        a = _trim(list(self.coeffs))
        r0, r1 = m, a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        if not r1:
            raise ZeroDivisionError("element is a zero divisor; minimal polynomial is reducible")
        c = r1[0]
        inv = [x / c for x in s1]
        _, inv = _pdivmod(inv, m)
        return self.field(inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            q = Fraction(other)
            return AlgebraicNumber._make(self.field, tuple(x * q.denominator for x in self._num), self._den * q.numerator)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- order --------------------------------------------------------------
    def sign(self) -> int:
        return self.field._sign(self._num)

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"cannot compare AlgebraicNumber with {type(other).__name__}")
        if o._den == self._den and o._num == self._num:
            return 0
        return (self - o).sign()

    def __eq__(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.field != self.field:
                raise FieldMismatchError("operands belong to different fields")
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        return hash((self._num, self._den))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return any(self._num)

    def enclosure(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        """Rational bounds on the real value, each within about 2^-bits."""
        return self.field._enclose(self._num, self._den, bits)

    def __float__(self):
        lo, hi = self.enclosure(80)
        return float((lo + hi) / 2)

    def __floor__(self):
        if self.is_rational():
            return math.floor(Fraction(self._num[0], self._den))
        k = 64
        while True:
            lo, hi = self.enclosure(k)
            if math.floor(lo) == math.floor(hi):
                return math.floor(lo)
            k *= 2

    # -- text ---------------------------------------------------------------
    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = "t"
            else:
                mono = f"t^{i}"
            if mono:
                if c == 1:
                    body = mono
                elif c == -1:
                    body = "-" + mono
                elif c.denominator == 1:
                    body = f"{c.numerator}*{mono}"
                elif abs(c.numerator) == 1:
                    body = f"{'-' if c < 0 else ''}{mono}/{c.denominator}"
                else:
                    body = f"{c.numerator}*{mono}/{c.denominator}"
            else:
                body = str(c)
            terms.append(body)
        if not terms:
            return "0"
        text = terms[-1]
        for term in reversed(terms[:-1]):
            text += " - " + term[1:] if term.startswith("-") else " + " + term
        return text

    def __repr__(self):
        return str(self)

    def serialize(self) -> str:
        """Exact reduced coefficient vector, e.g. ``[1/3, -2, 0, 5/7]``."""
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


# ---------------------------------------------------------------------------
# free functions


def _as_vector(x, degree: int) -> list[Fraction]:
    if isinstance(x, AlgebraicNumber):
        return list(x.coeffs)
    return [Fraction(x)] + [Fraction(0)] * (degree - 1)


def to_fraction_vector(x, degree: int) -> list[Fraction]:
    """Coordinates of ``x`` on the power basis; rationals pad with zeros."""
    return _as_vector(x, degree)


def _field_of(values) -> NumberField | None:
    field = None
    for v in values:
        if isinstance(v, AlgebraicNumber):
            if field is None:
                field = v.field
            elif v.field != field:
                raise FieldMismatchError("values belong to different fields")
    return field


def q_linear_rank(values: Iterable[Number]) -> int:
    """Dimension of the Q-span of ``values`` (exact Gaussian elimination)."""
    values = list(values)
    if not values:
        return 0
    field = _field_of(values)
    d = field.degree if field else 1
    rows = [_as_vector(v, d) for v in values]
    rank = 0
    for col in range(d):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / p[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], p)]
        rank += 1
    return rank


def floor_frac(a: Number) -> tuple[int, Number]:
    """Return ``(k, r)`` with ``a = k + r``, ``k`` integer and ``0 <= r < 1``."""
    k = math.floor(a)
    return k, a - k


# ---------------------------------------------------------------------------
# expression parser:  p/q literals, t, + - * /, parentheses, ^k

_TOKEN = re.compile(r"\s*(?:(\d+)|(t)|(\^)|([-+*/()]))")


class ParseError(ValueError):
    def __init__(self, message, pos=None, text=None):
        self.pos = pos
        self.line = self.column = None
        if text is not None and pos is not None:
            self.line = text.count("\n", 0, pos) + 1
            self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
            message = f"{message} at line {self.line}, column {self.column}"
        super().__init__(message)


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:pos + 1]!r}", pos, text)
        start = m.start(m.lastindex)
        out.append((m.group(m.lastindex), start))
        pos = m.end()
    return out


def parse_number(text: str, field: NumberField | None = None) -> Number:
    """Parse an expression in ``t``; rational results stay Fractions when no field."""
    tokens = _tokenize(text)
    i = 0

    def peek():
        return tokens[i][0] if i < len(tokens) else None

    def take(expected=None):
        nonlocal i
        if i >= len(tokens):
            raise ParseError("unexpected end of expression", len(text), text)
        tok, pos = tokens[i]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, got {tok!r}", pos, text)
        i += 1
        return tok

    def expr():
        val = term()
        while peek() in ("+", "-"):
            op = take()
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = unary()
        while peek() in ("*", "/"):
            op = take()
            rhs = unary()
            val = val * rhs if op == "*" else val / rhs
        return val

    def unary():
        if peek() == "-":
            take()
            return -unary()
        if peek() == "+":
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == "^":
            take()
            neg = False
            if peek() == "-":
                take()
                neg = True
            pos = tokens[i][1] if i < len(tokens) else len(text)
            tok = take()
            if not tok.isdigit():
                raise ParseError("exponent must be a small integer", pos, text)
            k = int(tok)
            base = base ** (-k if neg else k)
        return base

    def atom():
        tok = peek()
        if tok is None:
            raise ParseError("unexpected end of expression", len(text), text)
        if tok == "(":
            take()
            val = expr()
            take(")")
            return val
        if tok == "t":
            take()
            if field is None:
                raise ParseError("symbol t needs a number field", tokens[i - 1][1], text)
            return field.theta
        if tok[0].isdigit():
            take()
            return Fraction(tok)
        raise ParseError(f"unexpected token {tok!r}", tokens[i][1], text)

    if not tokens:
        raise ParseError("empty expression", 0, text)
    val = expr()
    if i != len(tokens):
        raise ParseError(f"unexpected token {tokens[i][0]!r}", tokens[i][1], text)
    if field is not None and not isinstance(val, AlgebraicNumber):
        val = field(val)
    return val


# ---------------------------------------------------------------------------
# presets

PRESETS = {
    "rational": ((0, 1), (-1, 1)),
    "sqrt2": ((-2, 0, 1), (1, 2)),
    "cubic2": ((-2, 0, 0, 1), (1, 2)),
    "quartic2": ((-2, 0, 0, 0, 1), (1, 2)),
}


@functools.lru_cache(maxsize=None)
def preset(name: str) -> NumberField:
    """Shipped fields: Q, Q(sqrt 2), Q(2^(1/3)), Q(2^(1/4))."""
    try:
        poly, interval = PRESETS[name]
    except KeyError:
        raise FieldError(f"unknown field preset {name!r}; choose from {sorted(PRESETS)}") from None
    return NumberField(poly, interval, name=name)
