"""Hermitian conjugation of multivectors.

``hconj_intrinsic`` works inside the algebra, with a formula picked by the
signature class; ``hconj_matrix`` conjugate-transposes the matrix
representation and maps the result back. The two must agree.
"""
from __future__ import annotations

import enum

import numpy as np

from .algebra import REAL, Multivector, ScalarField, random_multivector
from .errors import UnsupportedSignature
from .matrix_rep import IMAG_TRUNCATION_TOL, reconstruct, represent


class SignatureClass(enum.Enum):
    EUCLIDEAN = "euclidean"  # (n, 0)
    LORENTZ1 = "lorentz1"  # (1, n-1), n = 2, 3, 4
    LORENTZN = "lorentzN"  # (n-1, 1), n = 3, 4
    SPLIT22 = "split22"  # (2, 2)
    ANTI_EUCLIDEAN = "anti-euclidean"  # (0, n)


def classify(sig):
    """First matching class, in declaration order."""
    p, q, n = sig.p, sig.q, sig.n
    if q == 0:
        return SignatureClass.EUCLIDEAN
    if p == 1 and 2 <= n <= 4:
        return SignatureClass.LORENTZ1
    if q == 1 and 3 <= n <= 4:
        return SignatureClass.LORENTZN
    if (p, q) == (2, 2):
        return SignatureClass.SPLIT22
    if p == 0:
        return SignatureClass.ANTI_EUCLIDEAN
    raise UnsupportedSignature(f"no Hermitian conjugation formula for {sig}")


def _sandwich(a, u):
    return a * u * a


def hconj_intrinsic(u):
    sig, field = u.sig, u.field
    kind = classify(sig)
    star = u.clifford_conj()
    if kind is SignatureClass.EUCLIDEAN:
        return star
    if kind is SignatureClass.LORENTZ1:
        return _sandwich(Multivector.generator(sig, 1, field), star)
    if kind is SignatureClass.LORENTZN:
        return -_sandwich(Multivector.generator(sig, sig.n, field), star.involute())
    if kind is SignatureClass.SPLIT22:
        return -_sandwich(Multivector.blade(sig, 0b11, 1, field), star.involute())
    return star.involute()


hconj = hconj_intrinsic


def hconj_matrix(u):
    """Pull the conjugate transpose of ``represent(u)`` back into the algebra."""
    v = reconstruct(represent(u).conj().T, u.sig, "complex")
    if u.field is REAL and np.max(np.abs(v.coeffs.imag)) <= IMAG_TRUNCATION_TOL:
        v = Multivector(u.sig, v.coeffs.real, REAL)
    return v


def is_hermitian(u, tol=1e-12):
    return u.allclose(hconj_intrinsic(u), tol)


def random_hermitian(sig, field="complex", seed=None):
    """``(V + V^dagger) / 2`` for a random ``V`` drawn from ``seed``."""
    v = random_multivector(sig, ScalarField.parse(field), np.random.default_rng(seed))
    return (v + hconj_intrinsic(v)) / 2
