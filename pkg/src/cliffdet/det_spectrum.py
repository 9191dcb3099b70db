"""Determinant, characteristic polynomial, spectrum and inverse of multivectors.

Every quantity has a matrix route through :mod:`cliffdet.matrix_rep`. The
determinant additionally has a matrix-free route built from
``omega(U) = U^ * U~`` (grade involution times reversion):

* n = 1, 2: ``Det U = omega(U)``, which is a scalar;
* n = 3: ``Det U = omega(U)~ * omega(U)``, again a scalar;
* n = 4: ``Det U = <omega~ omega>_0 - 2 det(eta) <e1234 omega>_0 ** 2``.
"""
from __future__ import annotations

import numpy as np

from .algebra import COMPLEX, REAL, Multivector, pseudoscalar
from .errors import InternalInconsistency, NotInvertible
from .matrix_rep import reconstruct, represent
from .polyroots import faddeev_leverrier, polynomial_roots

SCALAR_PURITY_TOL = 1e-10
CHAR_POLY_DET_TOL = 1e-10
INVERTIBLE_TOL = 1e-10


def det_degree(n):
    """Homogeneity degree of Det: ``Det(b U) = b**k Det(U)``."""
    return 2 if n <= 2 else 4


def omega(u):
    return u.involute() * u.reverse()


def _scalar_part(x, what):
    residue = x.scalar_residue()
    if residue > SCALAR_PURITY_TOL * (1 + abs(x[0])):
        raise InternalInconsistency(f"{what} should be a scalar, non-scalar residue {residue:.3g}")
    return x[0]


def det_intrinsic(u):
    """Determinant from Clifford operations only."""
    n = u.sig.n
    om = omega(u)
    if n <= 2:
        return _scalar_part(om, "omega(U)")
    squared = om.reverse() * om
    if n == 3:
        return _scalar_part(squared, "omega(U)~ omega(U)")
    ell = pseudoscalar(u.sig, u.field)
    return squared.trace() - 2 * u.sig.det_eta * (ell * om).trace() ** 2


det = det_intrinsic


def det_matrix(u):
    return complex(np.linalg.det(represent(u)))


def char_poly(u):
    """Ascending coefficients ``c0..cd`` of ``det(represent(u) - x*I)``."""
    m = represent(u)
    coeffs = faddeev_leverrier(m)
    reference = det_matrix(u)
    magnitude = abs(reference) + u.max_abs() ** u.sig.rep_dim
    if abs(coeffs[0] - reference) > CHAR_POLY_DET_TOL * max(magnitude, 1e-300):
        raise InternalInconsistency("characteristic polynomial disagrees with det")
    return coeffs


def spectrum(u):
    """The ``d`` eigenvalues (with multiplicity) sorted by real then imaginary part."""
    return polynomial_roots(char_poly(u))


def is_invertible(u):
    k = det_degree(u.sig.n)
    return abs(det_intrinsic(u)) > INVERTIBLE_TOL * (1 + u.max_abs()) ** k


def inverse(u):
    if not is_invertible(u):
        raise NotInvertible(f"Det of {u!r} vanishes")
    return reconstruct(np.linalg.inv(represent(u)), u.sig, u.field)


def shift(u, lam):
    """``u - lam`` with ``lam`` a scalar, promoting to the complex field if needed."""
    if u.field is REAL and complex(lam).imag != 0:
        u = Multivector(u.sig, u.coeffs, COMPLEX)
    return u - lam
