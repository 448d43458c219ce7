"""
Groups with torsion
===================

``metabelian3`` is generated by a rotation R and the flip g of the thirds.
Commutators have order 3 and commute with each other.  ``alternating5``
adds block permutations from A_5; its commutators with small rotations
have local permutations at 0 that generate A_5.
"""

from fractions import Fraction as F

from ietlab import builtin, commutator, preset, rotation
from ietlab.groups import ell_morphism, local_permutation
from ietlab.perm import generate_group

K = preset("sqrt2")

gs = builtin("metabelian3", K)
r, g = gs.gens["r"], gs.gens["g"]
c = commutator(rotation(F(1, 12)), g)
print("[R_1/12, g] support:", c.support(), " cubed is identity:", (c**3).is_identity())
print("ell(R) =", ell_morphism(gs.family, r)[0], " ell(g) =", ell_morphism(gs.family, g)[0])

n = 5
alt = builtin("alternating5", K)
perms = []
for word in ("t1", "t2 t1 t2^-1"):
    cb = commutator(rotation(F(1, 20)), alt.evaluate(word))
    perms.append(local_permutation(cb, F(0), n))
    print(f"[R_1/20, {word}] local permutation at 0:", perms[-1])
print("generated group has order", len(generate_group(perms)))
