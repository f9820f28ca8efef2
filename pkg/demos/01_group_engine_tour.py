"""Tour of the permutation-group engine.

Builds a few groups, then walks through closure, solvability, conjugacy,
the solvable radical, and quotients on SL(2,5).
"""

import numpy as np

import solvcover as sc

# A5 from the classic pair of 3-cycles
a5 = sc.enumerate_group([sc.parse_cycles("(1,2,3)", 5), sc.parse_cycles("(3,4,5)", 5)])
print(f"<(1,2,3),(3,4,5)> has order {a5.order} on {a5.degree} points")

# subgroup closure: a dihedral D10 inside A5
five = next(i for i in range(a5.order) if a5.order_of[i] == 5)
inv = next(int(j) for j in a5.involution_indices()
           if len(sc.subgroup_closure(a5, [five, int(j)])) == 10)
d10 = sc.subgroup_closure(a5, [five, inv])
print(f"<order-5, involution> gives a subgroup of order {len(d10)}; "
      f"solvable: {sc.is_solvable(a5, d10)}")
print(f"A5 itself solvable: {sc.is_solvable(a5, sc.ElementSet.full(a5))}")

# conjugacy classes
cp = sc.conjugacy_classes(a5)
print("A5 class sizes:", sorted(cp.sizes.tolist()))

# SL(2,5): nontrivial radical, quotient is A5-sized and Fitting-free
F = sc.field_ops(5)


def mat_perm(a, b, c, d):
    img = np.empty(24, dtype=np.int64)
    for i in range(24):
        x, y = divmod(i + 1, 5)
        img[i] = (F.add(F.mul(a, x), F.mul(b, y))) * 5 + (F.add(F.mul(c, x), F.mul(d, y))) - 1
    return sc.Permutation(img)


sl25 = sc.enumerate_group([mat_perm(1, 1, 0, 1), mat_perm(0, F.neg(1), 1, 0)])
rad = sc.solvable_radical(sl25)
print(f"SL(2,5): order {sl25.order}, radical of size {len(rad)} (the center)")
quot = sc.quotient_by(sl25, rad)
print(f"SL(2,5)/center: order {quot.order}, radical size {len(sc.solvable_radical(quot))}")

# index-2 subgroups locate M10, PGL2(9), S6 inside PGammaL2(9)
pgl = sc.build(sc.pgammal2(9))
subs = sc.index_two_subgroups(pgl)
print(f"PGammaL(2,9) has {len(subs)} index-2 subgroups, orders {[len(H) for H in subs]}")
