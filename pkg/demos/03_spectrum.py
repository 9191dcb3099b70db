"""
Eigenvalues of a Clifford element
=================================

The spectrum of U is the set of scalars lambda with Det(U - lambda) = 0:
two of them for n <= 2 and four for n = 3, 4.
"""
import numpy as np

from cliffdet import Multivector, Signature, char_poly, det_intrinsic, eval_text, spectrum

for pq, text in [((1, 0), "e1"), ((0, 1), "e1"), ((3, 0), "e1 + e23"), ((1, 3), "2 + e1 + e2")]:
    sig = Signature(*pq)
    u = eval_text(text, sig)
    print(f"{sig}: spectrum({text}) = {np.round(spectrum(u), 12)}")

sig = Signature(2, 2)
u = eval_text("0.3 + e1 - 0.5*e24 + 2*e123", sig)
c = char_poly(u)
values = spectrum(u)
print("\nchar poly coefficients (ascending):", np.round(c, 6))
print("eigenvalues:", np.round(values, 6))
print("product of eigenvalues:", np.prod(values), " Det:", det_intrinsic(u))
print("sum of eigenvalues:", np.sum(values), " 4*Tr:", 4 * u.trace())

# Repeated eigenvalues are resolved to full precision.
print("\nspectrum(2.5) in Cl(3,1):", spectrum(Multivector.scalar(Signature(3, 1), 2.5)))
