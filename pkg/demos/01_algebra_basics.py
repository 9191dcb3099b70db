"""
Multivectors in Cl(p,q)
=======================

Build elements, multiply them, and apply the four conjugations.
"""
import numpy as np

from cliffdet import Multivector, Signature, eval_text, to_text

# Spacetime algebra: e1 squares to +1, e2..e4 square to -1.
sig = Signature(1, 3)
e1, e2, e3, e4 = (Multivector.generator(sig, k) for k in range(1, 5))

print("e1*e1 =", to_text(e1 * e1))
print("e2*e2 =", to_text(e2 * e2))
print("e1*e2 + e2*e1 =", to_text(e1 * e2 + e2 * e1))

# The same thing from the expression syntax used by the command-line tool.
u = eval_text("1 + 2*e1 - 0.5*e23 + 3i*e1234", sig)
print("U =", to_text(u))

# Grade involution flips odd grades, reversion flips grades 2 and 3,
# Clifford conjugation is reversion of the complex conjugate.
print("U^ =", to_text(u.involute()))
print("U~ =", to_text(u.reverse()))
print("U* =", to_text(u.clifford_conj()))

# Coefficients are indexed by bitmask: bit k-1 <-> e^k.
for r in range(sig.n + 1):
    print(f"grade {r}:", to_text(u.grade(r)))

v = eval_text("e2 - e34", sig)
print("Tr(UV - VU) =", (u * v - v * u).trace())
print("coefficient array of V:", np.round(v.coeffs, 3))
