"""Plain-text input format for fields, IETs, G_n elements and generator sets.

Grammar (``#`` starts a comment that runs to the end of the line)::

    document   = { statement } ;
    statement  = field | definition | relation | object ;
    field      = "field" ( name | "{" "minpoly" ":" list ";" "interval" ":" list [";"] "}" ) [";"] ;
    definition = name "=" object [";"] ;
    relation   = "relation" word [ "=" word ] ";" ;
    object     = iet | gn | "rotation" "(" expr ")" ;
    iet        = "iet" "{" "cuts" ":" list ";" "translations" ":" list [";"] "}" ;
    gn         = "gn" "{" "n" ":" integer ";" "alpha" ":" list ";" "sigma" ":" list [";"] "}" ;
    list       = "[" [ expr { "," expr } ] "]" ;
    word       = { name [ "^" integer ] } ;

``expr`` is a number-field expression (rationals ``p/q``, ``t`` for theta,
``+ - * /``, parentheses, ``^k``).  ``sigma`` is the 1-based image list.
A bare object with no name is stored under the name ``main``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .gn import GnElem
from .iet import Iet, IetError, rotation
from .numfield import AlgebraicNumber, NumberField, ParseError, parse_number, preset

__all__ = [
    "Document",
    "ParseError",
    "deserialize_number",
    "format_gn",
    "format_iet",
    "format_number",
    "parse_document",
    "serialize_number",
]


@dataclass
class Document:
    field: NumberField | None = None
    objects: dict = dc_field(default_factory=dict)  # name -> Iet
    gn: dict = dc_field(default_factory=dict)  # name -> GnElem for gn objects
    relations: list = dc_field(default_factory=list)  # (lhs text, rhs text)

    def single(self) -> Iet:
        if len(self.objects) != 1:
            raise ParseError(f"expected exactly one IET, found {len(self.objects)}")
        return next(iter(self.objects.values()))


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg, pos=None):
        return ParseError(msg, self.pos if pos is None else pos, self.text)

    def skip(self):
        t = self.text
        while self.pos < len(t):
            c = t[self.pos]
            if c.isspace():
                self.pos += 1
            elif c == "#":
                while self.pos < len(t) and t[self.pos] != "\n":
                    self.pos += 1
            else:
                break

    def at_end(self):
        self.skip()
        return self.pos >= len(self.text)

    def peek(self, s):
        self.skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s):
        self.skip()
        if not self.text.startswith(s, self.pos):
            found = self.text[self.pos:self.pos + 10] or "end of input"
            raise self.error(f"expected {s!r}, found {found!r}")
        self.pos += len(s)

    def optional(self, s):
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def name(self):
        self.skip()
        m = re.compile(r"[A-Za-z_][A-Za-z0-9_]*").match(self.text, self.pos)
        if not m:
            raise self.error("expected a name")
        self.pos = m.end()
        return m.group(0)

    def keyword(self, kw):
        self.skip()
        start = self.pos
        if self.name() != kw:
            self.pos = start
            raise self.error(f"expected {kw!r}")

    def raw_until(self, stops):
        """Text up to the first character in ``stops`` at bracket depth 0."""
        self.skip()
        start, depth = self.pos, 0
        t = self.text
        while self.pos < len(t):
            c = t[self.pos]
            if c == "(":
                depth += 1
            elif c == ")":
                if depth == 0 and ")" in stops:
                    break
                depth -= 1
            elif depth == 0 and c in stops:
                break
            elif c == "\n" and depth == 0 and "\n" in stops:
                break
            self.pos += 1
        return t[start:self.pos], start


def _expr(sc: _Scanner, raw: str, start: int, fld):
    if not raw.strip():
        raise sc.error("empty expression", start)
    try:
        return parse_number(raw, fld)
    except ParseError as e:
        off = e.pos if e.pos is not None else 0
        msg = str(e).split(" at line")[0]
        raise sc.error(msg, start + off) from None


def _list(sc: _Scanner, fld):
    sc.expect("[")
    out = []
    if sc.optional("]"):
        return out
    while True:
        raw, start = sc.raw_until(",]")
        out.append((_expr(sc, raw, start, fld), start))
        if sc.optional("]"):
            return out
        sc.expect(",")


def _field_stmt(sc: _Scanner):
    if sc.optional("{"):
        sc.keyword("minpoly")
        sc.expect(":")
        poly = [v for v, _ in _list(sc, None)]
        sc.expect(";")
        sc.keyword("interval")
        sc.expect(":")
        iv = [v for v, _ in _list(sc, None)]
        sc.optional(";")
        sc.expect("}")
        try:
            return NumberField(poly, iv)
        except ValueError as e:
            raise sc.error(str(e)) from None
    start = sc.pos
    name = sc.name()
    try:
        return preset(name)
    except ValueError as e:
        raise sc.error(str(e), start) from None


def _object(sc: _Scanner, fld):
    sc.skip()
    start = sc.pos
    kind = sc.name()
    if kind == "iet":
        sc.expect("{")
        sc.keyword("cuts")
        sc.expect(":")
        cuts = [v for v, _ in _list(sc, fld)]
        sc.expect(";")
        sc.keyword("translations")
        sc.expect(":")
        trans = [v for v, _ in _list(sc, fld)]
        sc.optional(";")
        sc.expect("}")
        try:
            return Iet(cuts, trans), None
        except IetError as e:
            raise sc.error(str(e), start) from None
    if kind == "gn":
        sc.expect("{")
        sc.keyword("n")
        sc.expect(":")
        raw, p = sc.raw_until(";")
        n = _expr(sc, raw, p, None)
        if not isinstance(n, Fraction) or n.denominator != 1 or n < 1:
            raise sc.error("n must be a positive integer", p)
        sc.expect(";")
        sc.keyword("alpha")
        sc.expect(":")
        alpha = [v for v, _ in _list(sc, fld)]
        sc.expect(";")
        sc.keyword("sigma")
        sc.expect(":")
        sig = _list(sc, None)
        sc.optional(";")
        sc.expect("}")
        sigma = []
        for v, p in sig:
            if not isinstance(v, Fraction) or v.denominator != 1:
                raise sc.error("sigma entries must be integers", p)
            sigma.append(int(v) - 1)
        try:
            e = GnElem(int(n), alpha, sigma)
        except ValueError as err:
            raise sc.error(str(err), start) from None
        return e.embed(), e
    if kind == "rotation":
        sc.expect("(")
        raw, p = sc.raw_until(")")
        sc.expect(")")
        return rotation(_expr(sc, raw, p, fld)), None
    raise sc.error(f"unknown object {kind!r}; expected iet, gn or rotation", start)


def parse_document(text: str, field: NumberField | None = None) -> Document:
    """Parse a document; ``field`` (when given) overrides a ``field`` statement."""
    sc = _Scanner(text)
    doc = Document(field=field)
    override = field is not None
    while not sc.at_end():
        start = sc.pos
        word = sc.name()
        if word == "field":
            fld = _field_stmt(sc)
            if not override:
                doc.field = fld
            sc.optional(";")
            continue
        if word == "relation":
            lhs, _ = sc.raw_until("=;")
            rhs = "1"
            if sc.optional("="):
                rhs, _ = sc.raw_until(";")
            sc.expect(";")
            doc.relations.append((lhs.strip(), rhs.strip()))
            continue
        fld = doc.field or preset("rational")
        if word in ("iet", "gn", "rotation") and not sc.peek("="):
            sc.pos = start
            name = "main"
        else:
            name = word
            sc.expect("=")
        if name in doc.objects:
            raise sc.error(f"duplicate definition of {name!r}", start)
        obj, gn = _object(sc, fld)
        doc.objects[name] = obj
        if gn is not None:
            doc.gn[name] = gn
        sc.optional(";")
    if doc.field is None:
        doc.field = preset("rational")
    return doc


# ---------------------------------------------------------------------------
# output


def format_number(x) -> str:
    """Human-readable exact expression, re-parseable by :func:`parse_number`."""
    return str(x)


def serialize_number(x, fld: NumberField) -> str:
    """Exact coefficient vector ``[c0, c1, ...]``."""
    if not isinstance(x, AlgebraicNumber):
        x = fld(x)
    return x.serialize()


def deserialize_number(text: str, fld: NumberField) -> AlgebraicNumber:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"expected a coefficient vector, got {text!r}")
    body = text[1:-1].strip()
    coeffs = [Fraction(c.strip()) for c in body.split(",")] if body else []
    if len(coeffs) != fld.degree:
        raise ParseError(f"expected {fld.degree} coefficients, got {len(coeffs)}")
    return fld(coeffs)


def format_iet(f: Iet) -> str:
    cuts = ", ".join(format_number(c) for c in f.cuts)
    trans = ", ".join(format_number(t) for t in f.translations)
    return f"iet {{ cuts: [{cuts}]; translations: [{trans}] }}"


def format_gn(e: GnElem) -> str:
    alpha = ", ".join(format_number(a) for a in e.alpha)
    sigma = ", ".join(str(s + 1) for s in e.sigma)
    return f"gn {{ n: {e.n}; alpha: [{alpha}]; sigma: [{sigma}] }}"
