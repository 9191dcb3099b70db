"""
Hermitian conjugation
=====================

U^+ is the element whose matrix is the conjugate transpose of U's matrix.
Inside the algebra it is a Clifford conjugation followed, depending on the
signature, by a grade involution and a sandwich with e1, e^n or e12.
"""
import numpy as np

from cliffdet import (
    ALL_SIGNATURES,
    Multivector,
    Signature,
    classify,
    hconj_intrinsic,
    hconj_matrix,
    random_hermitian,
    random_multivector,
    spectrum,
    to_text,
)

rng = np.random.default_rng(1)

print(f"{'signature':>10} {'class':>15} {'|intrinsic - matrix|':>22} {'max |Im eig(H)|':>18}")
for sig in ALL_SIGNATURES:
    worst = 0.0
    for _ in range(100):
        u = random_multivector(sig, "complex", rng)
        worst = max(worst, float(np.max(np.abs((hconj_intrinsic(u) - hconj_matrix(u)).coeffs))))
    imag = max(float(np.max(np.abs(spectrum(random_hermitian(sig, "real", s)).imag))) for s in range(20))
    print(f"{str(sig):>10} {classify(sig).value:>15} {worst:22.2e} {imag:18.2e}")

sig = Signature(1, 3)
print("\nin Cl(1,3):")
for k in range(1, 5):
    ek = Multivector.generator(sig, k)
    print(f"  (e{k})^+ =", to_text(hconj_intrinsic(ek)))

# Cl(1,1) is covered by the e1-sandwich formula. The e^n pattern used for
# (n-1, 1) with n = 3, 4 happens to give the same answer here too.
sig = Signature(1, 1)
e2 = Multivector.generator(sig, 2)
worst = 0.0
for _ in range(100):
    u = random_multivector(sig, "complex", rng)
    alternative = -(e2 * u.clifford_conj().involute() * e2)
    worst = max(worst, float(np.max(np.abs((alternative - hconj_matrix(u)).coeffs))))
print("\nCl(1,1), -e2 U*^ e2 vs matrix route:", worst)
