"""
Piecewise linear normal form
============================

A product of restricted rotations with disjoint supports becomes an element
of G_n with trivial block permutation after conjugating by a piecewise
affine homeomorphism P that stretches each support (and each fixed gap)
onto a block of length 1/n.
"""

from fractions import Fraction as F

from ietlab import preset, restricted_rotation
from ietlab.dynamics import pl_normalize

K = preset("sqrt2")
a = K.theta - 1

f = restricted_rotation(a / 6, (F(0), F(1, 3)))
nf = pl_normalize(f)
print("P =", nf.pl)
print("Phi =", nf.image)

# the identity P f P^-1 = Phi is checked as maps, piece by piece
print("exact:", nf.pl * f * nf.pl.inverse() == nf.image.embed())
