"""
Quantum modules over Laurent polynomials
========================================

Build V, its exterior powers and their tensor products, then carve out the
irreducible piece generated by a singular vector.
"""

from slkcat import qmodules as qm, tableaux as tb
from slkcat.scalars import qint

print("[3] =", qint(3))

# The q-antisymmetrized vector v2 ^ v1 in V (x) V.
print("v2 ^ v1 =", qm.wedge_expand((2, 1)))

# The coproduct action on expanded wedges closes on the wedge span.
for k in range(2, 5):
    for r in range(1, k):
        print(f"k={k} r={r}: mismatches {len(qm.wedge_closure_check(k, r))}")

# V (x) wedge^2 V for sl_3, and the submodule generated by its top singular vector.
c, k = (1, 1), 3
M = qm.build_tilde_V(c, k)
sing = qm.singular_vectors(M, qm.top_weight(c, k))
C = qm.submodule_closure(M, sing, ops=("F",))
lam = tb.partition_from_slk_weight(c)
print(f"\nambient dim {M.dim}, closure dim {C.dim}, #SSYT {len(tb.enumerate_semistandard(lam, k))}")
print("character:", C.character())

# The induced action is again a representation.
print("relations hold on the closure:", qm.relations_hold(C.induced()))

# Coefficients of the ambient action carry powers of q from the coproduct.
print("coefficients of F_1:", sorted({repr(x) for col in M.F[1] for x in col.values()}))
