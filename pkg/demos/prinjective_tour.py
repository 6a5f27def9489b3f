"""
Semistandard spans
==================

Column strict labels give alternating sums over each column.  Inside their
span, the F-closure of the highest label is a copy of the irreducible
module, with one basis vector per semistandard tableau.
"""

from slkcat import grothendieck as k0, qmodules as qm, tableaux as tb

for lam, k in [((2, 1), 3), ((2, 2), 3), ((3, 1), 4), (((1,), (1,)), 2)]:
    S = k0.PrinjectiveSpan(lam, k)
    T = S.transported()
    print(f"shape {lam}, k={k}: dim {S.dim}, #SSYT {len(tb.enumerate_semistandard(lam, k))},"
          f" stable {S.stable('F') and S.stable('E')}, relations {qm.relations_hold(T, classical=True)}")

# Simply deleting the other coordinates does not give a representation.
S = k0.PrinjectiveSpan((2, 1), 3)
print("\nplain coordinate cut is a representation:", qm.relations_hold(S.naive_projection(), classical=True))

# One column of height r is the r-th exterior power at q = 1.
T = k0.PrinjectiveSpan((2,), 4).transported()
W = qm.specialize_q1(qm.wedge_rep(4, 2))
print("column of height 2 equals wedge^2:", T.F == W.F and T.E == W.E)
