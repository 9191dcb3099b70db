"""
Determinant without matrices
============================

Det(U) is defined as the determinant of the Pauli-matrix image of U. It can
also be computed inside the algebra from omega(U) = U^ U~. The two routes
agree in every signature.
"""
import numpy as np

from cliffdet import (
    ALL_SIGNATURES,
    Multivector,
    Signature,
    det_intrinsic,
    det_matrix,
    inverse,
    is_invertible,
    omega,
    random_multivector,
    represent,
    to_text,
)

rng = np.random.default_rng(0)

print(f"{'signature':>10} {'worst |intrinsic - matrix|':>28}")
for sig in ALL_SIGNATURES:
    worst = 0.0
    for _ in range(200):
        u = random_multivector(sig, "complex", rng)
        worst = max(worst, abs(det_intrinsic(u) - det_matrix(u)))
    print(f"{str(sig):>10} {worst:28.2e}")

# For n = 1, 2 omega(U) is already a scalar.
sig = Signature(2, 0)
u = random_multivector(sig, "real", rng)
print("\nomega(U) in Cl(2,0):", to_text(omega(u)))

# The representation for n = 4 is 4x4.
sig = Signature(1, 3)
u = random_multivector(sig, "real", rng)
print("represent(U) for Cl(1,3):\n", np.round(represent(u), 3))

# Det is multiplicative, so (1 + e1)/2, a projector, cannot be inverted.
p = (1 + Multivector.generator(sig, 1)) / 2
print("Det((1+e1)/2) =", det_intrinsic(p), " invertible:", is_invertible(p))

w = inverse(u)
print("U^-1 =", to_text(w))
print("max |U U^-1 - 1| =", np.max(np.abs((u * w - 1).coeffs)))
