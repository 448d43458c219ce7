"""
Wreath products in G_n
======================

For a finite permutation group F, the map E sends a family of rotations
indexed by F and an element of F to an element of G_#F.  The diagonal
rotation together with the translations by F gives a free action of
Z x F.
"""

from ietlab import free_up_to, preset, relation_check, wreath_embedding

K = preset("sqrt2")
a = K.theta - 1

emb = wreath_embedding([a], [(1, 0, 2), (1, 2, 0)])  # S_3
print("blocks:", emb.size)
for name, e in emb.gens.gn.items():
    print(name, e)
print(all(r.holds for r in relation_check(emb.gens)))
print(free_up_to(emb.gens, 5).verdict)
