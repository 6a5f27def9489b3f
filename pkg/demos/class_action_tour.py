"""
Verma classes and the sl_k action
=================================

Labels a in {1..k}^n stand for Verma classes.  F_i raises one entry equal
to i, E_i lowers one entry equal to i+1.  At the level of classes this is
the tensor power of the vector representation at q = 1.
"""

from slkcat import grothendieck as k0
from slkcat.weights import compositions

print("F(1,2) =", k0.op_F((1, 2), 3).to_json())
print("F_1(1,2) =", k0.op_F_i((1, 2), 1, 3).to_json())

for n, k in [(2, 3), (3, 3), (4, 4)]:
    rel = k0.verify_slk_action(n, k)
    iso = k0.iso_to_tensor(n, k)
    print(f"n={n} k={k}: {sum(ok for _, ok in rel)}/{len(rel)} relations,"
          f" intertwiner {all(ok for _, ok in iso)}, block violations {len(k0.block_discipline(n, k))}")

# Splitting F_1 along a Levi composition.
a = (1, 1, 2)
for levi in compositions(3):
    groups = k0.tpc3_split(a, levi, 1, 3)
    print(levi, [g.to_json() for g in groups])
