"""
The degenerate affine Hecke algebra on tensor space
===================================================

x_h acts by c plus the flips of position h with earlier positions, and t_j
by the flip of positions j, j+1.  The relations are checked as integer
matrix identities, and the sign of the cross relation is read off the
matrices rather than assumed.
"""

import random

from slkcat import dahecke as dh

rep = dh.verify_dahecke_relations(dh.PsiModel(2, 2, 0))
print("orientation found:", rep["verified_orientation"])
print("the other sign holds:", rep["printed_orientation_holds"])
for item in rep["relations"]:
    print(f"  {item['name']:<28} {item['holds']}")

# Products in the algebra agree with products of matrices.
rng = random.Random(1)
model = dh.PsiModel(3, 3, 1)
a, b = dh.random_element(3, rng), dh.random_element(3, rng)
print("\npsi(ab) = psi(a) psi(b):", dh.homomorphism_check(model, a, b))

# Eigenvalues of x_h are c plus contents of boxes.
for h in range(1, 4):
    print(f"spectrum of x_{h} on (C^2)^3 with c=0:", dh.x_spectrum(dh.PsiModel(2, 3, 0), h))
