"""
Weights, blocks and the Levi poset
==================================
"""

from slkcat import weights as wt
from slkcat import grothendieck as k0

a = (1, 3, 1, 2)
print("phi", a, "=", wt.phi(a, 3))
d = wt.dominant_rep(a)
for i in (1, 2):
    print(f"(+{i}){d} = {wt.plus_i(d, i)}   (-{i}){d} = {wt.minus_i(d, i)}")

# Orbit classes modulo a Levi, ordered by dominance.
P = wt.xi_classes((3, 2, 1), (1, 2))
for n, cls in enumerate(P.classes):
    below = [P.classes[i].representative for i, j in P.leq_pairs() if j == n and i != n]
    print(cls.representative, "is above", below)

# Shift bookkeeping: the adjunction shift exceeds the composed shift by 2.
for x in [(1, 1, 2), (1, 2, 3), (2, 2, 1)]:
    g = k0.graded_shifts(x, 1)
    print(x, g, "composed:", k0.composed_shift(x, 1))
