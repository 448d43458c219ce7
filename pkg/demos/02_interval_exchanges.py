"""
Interval exchange transformations
=================================

An IET is stored canonically: the left ends of its maximal continuity
intervals and the translation on each.  Composition is right to left, so
``f * g`` is ``f o g``.
"""

from fractions import Fraction as F

from ietlab import Iet, preset, restricted_rotation, rotation

K = preset("sqrt2")
a = K.theta - 1

r = rotation(a)
print("R_a =", r)
print("break points:", sorted(r.break_points()))

# adjacent pieces with the same translation merge
print(Iet([0, F(1, 3), F(1, 2)], [0, 0, 0]))

# a restricted rotation on [0, 1/2) fixes the other half
f = restricted_rotation(a / 4, (F(0), F(1, 2)))
print("support:", f.support(), " fixed set:", f.fixed_set())

# composition, inverse, powers
g = r * f * r.inverse()
print("conjugate has", len(g), "pieces")
print("R_a^5 = R_{5a mod 1}:", r**5 == rotation(5 * a - 2))

# an IET given by lengths and a permutation
h = Iet.from_lengths([F(1, 2), F(1, 4), F(1, 4)], [2, 1, 0])
print("h =", h, " h(0) =", h(F(0)))
