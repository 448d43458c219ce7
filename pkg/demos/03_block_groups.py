"""
The groups G_n
==============

An element of G_n rotates each of the n equal blocks of [0, 1) and then
permutes the blocks.  It is a pair (alpha, sigma); the embedding into the
IET group is a homomorphism, and it can be inverted on its image.
"""

from fractions import Fraction as F

from ietlab import GnElem, preset, rotation
from ietlab.gn import gn_order, gn_periodic_point_free, gn_recognize

K = preset("sqrt2")
a = K.theta - 1

f = GnElem(2, [F(1, 8), 0], [1, 0])
g = GnElem(2, [0, F(1, 8)], [1, 0])
print("f * g =", f * g)
print("same as composing the IETs:", (f * g).embed() == f.embed() * g.embed())

# BS(1,-1) inside G_2
x = GnElem(2, [a / 4, -a / 4])
y = GnElem(2, [a / 5, a / 7], [1, 0])
print("y x y^-1 = x^-1:", y * x * y.inverse() == x.inverse())
print("x acts without periodic points:", gn_periodic_point_free(x))

# orders
flip = GnElem.permutation([2, 1, 0])
print("order of the block flip:", gn_order(flip))
r = rotation(F(1, 12))
c = gn_recognize(12, r * flip.embed() * r.inverse() * flip.embed().inverse())
print("[R_1/12, flip] lies in G_12 with order", gn_order(c))
