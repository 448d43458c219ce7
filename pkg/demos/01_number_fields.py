"""
Exact real number fields
========================

Every coordinate in the library lives in Q(t) for a real algebraic t.
Elements compare exactly: the sign of p(t) is decided by refining an
isolating interval of t until it excludes the roots of p.
"""

from fractions import Fraction

from ietlab import parse_number, preset, q_linear_rank
from ietlab.numfield import floor_frac

K = preset("sqrt2")
t = K.theta
print(K)
print("t*t =", t * t)
print("1/t =", 1 / t)

# comparison is exact, no floats involved
print("3t > 4 ?", 3 * t > 4)
print("floor and fractional part of -t:", floor_frac(-t))

# the parser accepts the same syntax that str() produces
x = parse_number("(t - 1)/5 + 1/3", K)
print(x, "->", x.serialize())

# rank over Q of a family of numbers
Q4 = preset("quartic2")
u = Q4.theta
print("rank of 1, u, u^2, u^3:", q_linear_rank([Q4.one, u, u**2, u**3]))
print("rank of 1, u/4, 1/2 + u/4:", q_linear_rank([Q4.one, u / 4, Fraction(1, 2) + u / 4]))
