"""
Groups given by generators and relations
========================================

The two built-in examples with presentations: BS(1,-1) acting in G_2 and
the crystallographic group C_1 acting in G_4.  Relations are checked
exactly; freeness is checked on every element up to a word length.
"""

from ietlab import ball_growth, builtin, free_up_to, preset, relation_check

bs = builtin("bs11", preset("quartic2"))
for res in relation_check(bs):
    print(res)
print(free_up_to(bs, 6).verdict)
print("ball sizes:", ball_growth(bs, 6))

c1 = builtin("crystallographic", preset("cubic2"))
for res in relation_check(c1):
    print(res)

# Both relations hold, but the commutator of the two generators only moves
# points through the rotating blocks and is the identity on [1/2, 3/4).
rep = free_up_to(c1, 5)
print(rep.verdict, "fixed set", rep.fixed_set)
