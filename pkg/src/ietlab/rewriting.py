"""Knuth-Bendix completion for finite group presentations (shortlex order).

Used only to certify that a word is trivial in a presented group: every
rewriting step is a consequence of the relators, so reaching the empty word
is a proof of triviality whether or not completion finished.
"""

from __future__ import annotations

from dataclasses import dataclass


def _shortlex_gt(u: tuple, v: tuple) -> bool:
    return (len(u), u) > (len(v), v)


@dataclass
class RewritingSystem:
    rules: list
    complete: bool

    def reduce(self, w: tuple) -> tuple:
        w = tuple(w)
        changed = True
        while changed:
            changed = False
            for lhs, rhs in self.rules:
                k = len(lhs)
                for i in range(len(w) - k + 1):
                    if w[i:i + k] == lhs:
                        w = w[:i] + rhs + w[i + k:]
                        changed = True
                        break
                if changed:
                    break
        return w


def _orient(u, v):
    if u == v:
        return None
    return (u, v) if _shortlex_gt(u, v) else (v, u)


def knuth_bendix(ngens: int, relators, max_rules: int = 300, max_len: int = 24) -> RewritingSystem:
    """Complete the presentation with letters ``0..2*ngens-1``; ``i ^ 1`` is the inverse of i."""
    rules = []
    for i in range(2 * ngens):
        rules.append(((i, i ^ 1), ()))
    rs = RewritingSystem(rules, False)
    pending = [_orient(tuple(r), ()) for r in relators if r]
    pending = [p for p in pending if p]

    def add(pair):
        lhs, rhs = rs.reduce(pair[0]), rs.reduce(pair[1])
        rule = _orient(lhs, rhs)
        if rule is None:
            return False
        rs.rules.append(rule)
        # drop rules whose left side is now reducible
        kept = []
        for l, r in rs.rules:
            if (l, r) is rule:
                kept.append((l, r))
                continue
            others = RewritingSystem([x for x in rs.rules if x != (l, r)], False)
            if others.reduce(l) != l:
                pending.append((l, r))
            else:
                kept.append((l, others.reduce(r)))
        rs.rules[:] = kept
        return True

    for p in pending[:]:
        pending.remove(p)
        add(p)
    i = 0
    while True:
        while pending:
            add(pending.pop())
        new = False
        rules_now = list(rs.rules)
        for l1, r1 in rules_now:
            for l2, r2 in rules_now:
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k]:
                        w1 = r1 + l2[k:]
                        w2 = l1[:-k] + r2
                        a, b = rs.reduce(w1), rs.reduce(w2)
                        if a != b:
                            if max(len(a), len(b)) > max_len or len(rs.rules) >= max_rules:
                                return rs
                            if add((a, b)):
                                new = True
                if len(l2) < len(l1):
                    for s in range(len(l1) - len(l2) + 1):
                        if l1[s:s + len(l2)] == l2:
                            a = rs.reduce(r1)
                            b = rs.reduce(l1[:s] + r2 + l1[s + len(l2):])
                            if a != b and add((a, b)):
                                new = True
        i += 1
        if not new:
            rs.complete = True
            return rs
