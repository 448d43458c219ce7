"""``iet-lab`` command line.

Exit status: 0 success, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import dynamics, groups, saf
from .iet import Iet
from .numfield import FieldError, ParseError, parse_number, preset
from .perm import perm_commutator
from .textio import format_gn, format_iet, format_number, parse_document, serialize_number


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def _load(path: str, fld):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    try:
        return parse_document(text, fld)
    except ParseError as e:
        raise InputError(f"{path}: {e}") from None


def _field(args):
    if args.field is None:
        return None
    try:
        return preset(args.field)
    except FieldError as e:
        raise InputError(str(e)) from None


def _number(text, fld):
    try:
        return parse_number(text, fld)
    except ParseError as e:
        raise InputError(f"bad number {text!r}: {e}") from None


class _Out:
    """Collects a machine report and prints either JSON or text lines."""

    def __init__(self, args, fld):
        self.json = args.json
        self.fld = fld
        self.report = {}
        self.lines = []

    def num(self, x):
        return serialize_number(x, self.fld) if self.json else format_number(x)

    def nums(self, xs):
        return [self.num(x) for x in xs]

    def iset(self, s):
        return [[self.num(a), self.num(b)] for a, b in s]

    def iet(self, f: Iet):
        if self.json:
            return {"cuts": self.nums(f.cuts), "translations": self.nums(f.translations)}
        return format_iet(f)

    def line(self, text=""):
        self.lines.append(text)

    def emit(self):
        if self.json:
            self.report.setdefault("field", self.fld.name)
            print(json.dumps(self.report, indent=2, sort_keys=True))
        else:
            for ln in self.lines:
                print(ln)


def _single(args, fld):
    doc = _load(args.iet, fld)
    name = getattr(args, "name", None)
    if name:
        if name not in doc.objects:
            raise InputError(f"{args.iet}: no definition named {name!r}")
        return doc.objects[name], doc.field
    try:
        return doc.single(), doc.field
    except ParseError as e:
        raise InputError(f"{args.iet}: {e}; use --name") from None


# ---------------------------------------------------------------------------
# commands


def cmd_eval(args):
    f, fld = _single(args, _field(args))
    out = _Out(args, fld)
    xs = [_number(x, fld) for x in args.x]
    ys = []
    for x in xs:
        if not (0 <= x < 1):
            raise InputError(f"point {x} outside [0, 1)")
        ys.append(f(x))
    out.report = {"points": out.nums(xs), "images": out.nums(ys)}
    for x, y in zip(xs, ys):
        out.line(f"f({format_number(x)}) = {format_number(y)}")
    out.emit()
    return 0


def cmd_compose(args):
    fld = _field(args)
    fs = []
    for path in args.iet:
        doc = _load(path, fld)
        fld = fld or doc.field
        fs.extend(doc.objects.values())
    h = Iet.identity()
    for f in fs:
        h = h * f
    if args.power != 1:
        h = h ** args.power
    out = _Out(args, fld)
    out.report = {"result": out.iet(h), "break_points": len(h.cuts)}
    out.line(format_iet(h))
    out.emit()
    return 0


def cmd_orbit(args):
    f, fld = _single(args, _field(args))
    x = _number(args.x, fld)
    if not (0 <= x < 1):
        raise InputError(f"point {x} outside [0, 1)")
    orb = dynamics.orbit(f, x, args.length)
    out = _Out(args, fld)
    out.report = {"orbit": out.nums(orb.points), "period": orb.period}
    for k, y in enumerate(orb.points):
        out.line(f"{k:>5}  {format_number(y)}")
    out.line(f"period: {orb.period if orb.period else 'none up to ' + str(args.length)}")
    out.emit()
    return 0


def cmd_decompose(args):
    f, fld = _single(args, _field(args))
    rep = dynamics.decompose(f, args.depth)
    out = _Out(args, fld)
    out.report = rep.to_dict(out.num)
    out.line(f"{'kind':<10} {'detail':<16} set")
    for s, p in rep.periodic:
        out.line(f"{'periodic':<10} {'period ' + str(p):<16} {s}")
    for s, st in rep.minimal:
        out.line(f"{'minimal':<10} {st:<16} {s}")
    if rep.residual:
        out.line(f"{'residual':<10} {'undecided':<16} {rep.residual}")
    out.emit()
    return 0


def cmd_growth(args):
    f, fld = _single(args, _field(args))
    tr = dynamics.bp_growth(f, args.length)
    out = _Out(args, fld)
    out.report = tr.to_dict()
    out.line("counts: " + " ".join(str(c) for c in tr.counts))
    out.line("verdict: " + (f"bounded({tr.bound})" if tr.verdict == "bounded" else tr.verdict))
    if args.x is not None:
        x = _number(args.x, fld)
        r = dynamics.rate_estimate(f, x, args.length)
        out.report["rate_estimate"] = str(r)
        out.report["orbit"] = "forward and backward to depth N"
        out.line(f"rate estimate at depth {args.length} (two-sided orbit): {r}")
    out.emit()
    return 0


def _gens_from_file(path, fld):
    doc = _load(path, fld)
    try:
        return groups.GeneratorSet(doc.objects, doc.relations, gn=doc.gn), doc.field
    except ValueError as e:
        raise InputError(f"{path}: {e}") from None


def cmd_ball(args):
    gs, fld = _gens_from_file(args.gens, _field(args))
    sizes = groups.ball_growth(gs, args.depth)
    out = _Out(args, fld)
    out.report = {"ball_sizes": sizes}
    out.line("ball sizes: " + " ".join(str(s) for s in sizes))
    out.emit()
    return 0


def cmd_free(args):
    gs, fld = _gens_from_file(args.gens, _field(args))
    rep = groups.free_up_to(gs, args.depth, periodic=args.periodic)
    out = _Out(args, fld)
    out.report = rep.to_dict(out.num)
    out.line(rep.verdict + f" ({rep.elements} elements)")
    if rep.violation is not None:
        out.line(f"{rep.reason}: fixed set {rep.fixed_set}")
    out.emit()
    return 0 if rep.free else 1


def _params(args, fld):
    out = {}
    for item in args.params or []:
        if "=" not in item:
            raise InputError(f"parameter {item!r} must look like name=expr")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip() if k.strip() == "n" else _number(v, fld)
    if "n" in out:
        try:
            out["n"] = int(out["n"])
        except ValueError:
            raise InputError("n must be an integer") from None
    return out


def _verify_family(gs, out, rng, length):
    """Checks for the groups carrying ell; returns True when all pass."""
    fam = gs.family
    names = list(gs.gens)
    ok = True

    def rand_word(k):
        return groups.Word((rng.choice(names), rng.choice((-1, 1))) for _ in range(k))

    results = []
    hom = True
    for _ in range(20):
        u, v = rand_word(rng.randint(1, 6)), rand_word(rng.randint(1, 6))
        fu, fv = gs.evaluate(u), gs.evaluate(v)
        lu, lv, luv = (groups.ell_morphism(fam, h) for h in (fu, fv, fu * fv))
        if None in (lu, lv, luv) or luv[0] != lu[0] + lv[0]:
            hom = False
    results.append(("ell is additive on random words", hom))
    r = gs.gens["r"]
    if gs.name == "metabelian3":
        g = gs.gens["g"]
        orders = []
        for _ in range(10):
            c = groups.commutator(gs.evaluate(rand_word(4)), gs.evaluate(rand_word(4)))
            orders.append(c.is_identity() or (c ** 3).is_identity())
        results.append(("nontrivial commutators have order 3", all(orders)))
        bps = [groups.commutator(r ** k, g).break_points() for k in range(1, 11)]
        results.append(("[R^k, g], k = 1..10, have distinct break points", len(set(bps)) == 10))
    else:
        n = gs.params["n"]
        sigma = tuple((p + 1) % n for p in range(n))
        good = True
        for t in gs.gn.values():
            c = groups.commutator(r, t.embed())
            if groups.local_permutation(c, Fraction(0), n) != perm_commutator(sigma, t.sigma):
                good = False
        results.append(("local permutation of [R, t_a] at 0 is [sigma, tau]", good))
    for label, good in results:
        out.line(f"{label}: {'holds' if good else 'FAILS'}")
        ok = ok and good
    out.report["checks"] = {label: good for label, good in results}
    if length:
        rep = groups.free_up_to(gs, length)
        out.line(f"free action: {rep.verdict} (expected: the group has torsion)")
        out.report["free"] = rep.verdict
    return ok


def cmd_verify(args):
    name = args.builtin
    fld = _field(args) or preset(groups.DEFAULT_FIELDS.get(name, groups.DEFAULT_FIELDS.get(name.rstrip("0123456789"), "sqrt2")))
    params = _params(args, fld)
    try:
        gs = groups.builtin(name, fld, params)
    except groups.ConstraintError as e:
        raise InputError(str(e)) from None
    except ValueError as e:
        raise InputError(str(e)) from None
    out = _Out(args, fld)
    out.report = {"builtin": gs.name, "params": {k: out.num(v) if k != "n" else v for k, v in gs.params.items()}}
    ok = True
    summary = []
    if gs.relations:
        res = groups.relation_check(gs)
        out.report["relations"] = [
            {"relation": f"{r.lhs} = {r.rhs}", "holds": r.holds,
             "witness": None if r.holds else out.num(r.witness)} for r in res
        ]
        for r in res:
            out.line(str(r))
        if all(r.holds for r in res) and gs.family is None:
            summary.append("relator holds" if len(res) == 1 else "relators hold")
        ok = all(r.holds for r in res)
    rng = random.Random(args.seed)
    if gs.family is None:
        length = args.length or {"bs11": 6}.get(gs.name, 5)
        rep = groups.free_up_to(gs, length)
        out.report["free"] = rep.to_dict(out.num)
        summary.append(rep.verdict)
        if rep.violation is not None:
            out.line(f"{rep.reason}: {rep.violation} fixes {rep.fixed_set}")
        ok = ok and bool(rep.free)
    else:
        ok = _verify_family(gs, out, rng, args.length) and ok
    out.report["ok"] = ok
    if summary:
        out.line("; ".join(summary))
    out.emit()
    return 0 if ok else 1


def cmd_saf(args):
    fld = _field(args)
    fs = []
    for path in args.iet:
        doc = _load(path, fld)
        fld = fld or doc.field
        fs.extend(doc.objects.values())
    if not fs:
        raise InputError("no IETs given")
    out = _Out(args, fld)
    vals = [saf.saf_invariant(f, fld.degree) for f in fs]
    out.report = {"saf": [v.to_list() for v in vals]}
    for i, v in enumerate(vals):
        out.line(f"SAF #{i + 1}:")
        out.line(str(v))
    if len(fs) == 2:
        verdict = saf.saf_distinguish(fs[0], fs[1])
        out.report["verdict"] = verdict
        out.line(verdict)
    out.emit()
    return 0


def cmd_normalize(args):
    f, fld = _single(args, _field(args))
    nf = dynamics.pl_normalize(f)
    out = _Out(args, fld)
    if nf is None:
        out.report = {"normal_form": None}
        out.line("not a product of restricted rotations with disjoint supports")
        out.emit()
        return 1
    pieces = nf.pl.pieces()
    out.report = {
        "n": nf.image.n,
        "pl": [{"from": out.num(a), "to": out.num(b), "slope": out.num(m), "offset": out.num(o)}
               for a, b, m, o in pieces],
        "phi": {"alpha": out.nums(nf.image.alpha), "sigma": [s + 1 for s in nf.image.sigma]},
        "blocks": out.iset(nf.blocks),
    }
    out.line(f"n = {nf.image.n}")
    for a, b, m, o in pieces:
        out.line(f"P(x) = {format_number(m)}*x + ({format_number(o)})  on [{format_number(a)}, {format_number(b)})")
    out.line("Phi = " + format_gn(nf.image))
    out.emit()
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="field preset: rational, sqrt2, cubic2, quartic2")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    p = _Parser(prog="iet-lab", description="Exact computations with interval exchange transformations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("eval", parents=[common], help="evaluate an IET at points")
    s.add_argument("--iet", required=True)
    s.add_argument("--name")
    s.add_argument("--x", action="append", required=True, help="point (repeatable)")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("compose", parents=[common], help="compose IETs (first file outermost)")
    s.add_argument("--iet", action="append", required=True)
    s.add_argument("--power", type=int, default=1)
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("orbit", parents=[common], help="orbit of a point")
    s.add_argument("--iet", required=True)
    s.add_argument("--name")
    s.add_argument("--x", required=True)
    s.add_argument("--length", type=int, default=20)
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("decompose", parents=[common], help="periodic and minimal components")
    s.add_argument("--iet", required=True)
    s.add_argument("--name")
    s.add_argument("--depth", type=int, default=20)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("growth", parents=[common], help="break-point growth of powers")
    s.add_argument("--iet", required=True)
    s.add_argument("--name")
    s.add_argument("--length", type=int, default=30)
    s.add_argument("--x", help="also estimate the discontinuity growth rate along the orbit of x")
    s.set_defaults(func=cmd_growth)

    for cmd, func, hlp in (("ball", cmd_ball, "ball sizes"), ("free", cmd_free, "check freeness up to a word length")):
        s = sub.add_parser(cmd, parents=[common], help=hlp)
        s.add_argument("--gens", required=True)
        s.add_argument("--depth", type=int, default=4)
        if cmd == "free":
            s.add_argument("--periodic", type=int, default=0, help="also search periodic points up to this period")
        s.set_defaults(func=func)

    s = sub.add_parser("verify", parents=[common], help="check a built-in example")
    s.add_argument("builtin", help="bs11, crystallographic, metabelian3, alternating<n>")
    s.add_argument("--params", nargs="*", help="name=expr bindings, e.g. alpha=t/4")
    s.add_argument("--length", type=int, default=0, help="word length for the freeness check")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("saf", parents=[common], help="SAF invariant (two IETs: compare)")
    s.add_argument("--iet", action="append", required=True)
    s.set_defaults(func=cmd_saf)

    s = sub.add_parser("normalize", parents=[common], help="PL normal form of a product of restricted rotations")
    s.add_argument("--iet", required=True)
    s.add_argument("--name")
    s.set_defaults(func=cmd_normalize)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for attr in ("depth", "length"):
            v = getattr(args, attr, None)
            if v is not None and v < (0 if attr == "length" and args.command == "verify" else 1):
                raise InputError(f"--{attr} must be positive")
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
