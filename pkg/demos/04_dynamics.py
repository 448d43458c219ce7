"""
Orbits, break point growth and decomposition
============================================

Rotations and G_n elements keep a bounded number of break points under
iteration; a generic IET does not.  ``decompose`` splits [0, 1) into
periodic components and minimal components, certifying minimality when
the first return map has rationally independent lengths.
"""

from fractions import Fraction as F

from ietlab import Iet, preset, product_of_restricted_rotations, rotation
from ietlab.dynamics import bp_growth, decompose, orbit, rate_estimate

K = preset("sqrt2")
a = K.theta - 1

print(orbit(rotation(F(1, 4)), F(0), 4))

print("R_a:", bp_growth(rotation(a), 10).counts)

Q4 = preset("quartic2")
u = Q4.theta
lengths = [u / 8, u * u / 8, u**3 / 16]
lengths.append(1 - sum(lengths, Q4.zero))
keane = Iet.from_lengths(lengths, [3, 2, 1, 0])
trace = bp_growth(keane, 10)
print("4-IET:", trace.counts, trace.verdict)

# rate of new discontinuities along an orbit
print("rate estimate at x = 1/5:", rate_estimate(keane, F(1, 5), 50))

# two irrational restricted rotations, a rational one and a fixed gap
f = product_of_restricted_rotations([
    (a / 4, (F(0), F(1, 4))),
    (F(1, 12), (F(1, 4), F(1, 2))),
    (a / 6, (F(3, 4), F(1))),
])
rep = decompose(f, 10)
for comp, k in rep.periodic:
    print("periodic", comp, "period", k)
for comp, status in rep.minimal:
    print("minimal ", comp, status)
