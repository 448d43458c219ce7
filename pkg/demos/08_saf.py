"""
The SAF invariant
=================

SAF(f) is the sum over the intervals of f of length ^ translation in
R ^_Q R.  Inside a field of degree d this is an antisymmetric d x d
rational matrix.  It is unchanged by conjugation, so different values
prove two IETs are not conjugate.
"""

from fractions import Fraction as F

from ietlab import preset, restricted_rotation, rotation, saf_distinguish, saf_invariant

K = preset("sqrt2")
a = K.theta - 1

print(saf_invariant(rotation(a)))
print("rational rotation is zero:", saf_invariant(rotation(F(2, 7))).is_zero())

h = restricted_rotation(a / 3, (F(1, 5), F(4, 5)))
f = rotation(a)
print(saf_distinguish(f, h * f * h.inverse()))
print(saf_distinguish(f, rotation(2 * a)))
