"""Permutations of range(n) as image tuples, composed right to left."""

from __future__ import annotations

from typing import Iterable, Sequence

Perm = tuple[int, ...]


def perm_compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """``p o q``: apply q first."""
    return tuple(p[i] for i in q)


def perm_inverse(p: Sequence[int]) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def perm_identity(n: int) -> Perm:
    return tuple(range(n))


def perm_commutator(p: Sequence[int], q: Sequence[int]) -> Perm:
    """``p q p^-1 q^-1``."""
    return perm_compose(perm_compose(p, q), perm_compose(perm_inverse(p), perm_inverse(q)))


def perm_cycles(p: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(tuple(cyc))
    return out


def perm_sign(p: Sequence[int]) -> int:
    return -1 if sum(len(c) - 1 for c in perm_cycles(p)) % 2 else 1


def from_cycles(n: int, *cycles: Iterable[int]) -> Perm:
    """Permutation of range(n) from disjoint 0-based cycles."""
    out = list(range(n))
    for cyc in cycles:
        cyc = list(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            out[a] = b
    return tuple(out)


def generate_group(gens: Iterable[Sequence[int]], n: int | None = None) -> set[Perm]:
    """All elements of the group generated by ``gens`` (breadth-first closure)."""
    gens = [tuple(g) for g in gens]
    if n is None:
        if not gens:
            raise ValueError("need n when there are no generators")
        n = len(gens[0])
    ident = perm_identity(n)
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                x = perm_compose(g, h)
                if x not in group:
                    group.add(x)
                    nxt.append(x)
        frontier = nxt
    return group
