"""Pauli-matrix representation of Cl(p,q) and its left inverse.

Generators are represented by 2x2 matrices for n = 1, 2 and by 4x4 block
matrices for n = 3, 4. Generators past the first ``p`` carry a factor ``i``
so that they square to ``-1``. Every blade matrix has entries in
{0, +-1, +-i}, so the blade table itself is exact in floating point.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .algebra import COMPLEX, REAL, Multivector, ScalarField
from .errors import FieldViolation, NotInImage, UnsupportedDimension

SIGMA = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
SIGMA.setflags(write=False)

RECONSTRUCT_RESIDUAL_TOL = 1e-9
IMAG_TRUNCATION_TOL = 1e-10


@dataclass(frozen=True)
class GeneratorSet:
    sig: object
    mats: np.ndarray  # (n, d, d)
    alphas: tuple


@dataclass(frozen=True)
class BladeRepTable:
    """Matrices of all ``2**n`` basis blades plus their Frobenius Gram factorization."""

    sig: object
    blades: np.ndarray  # (2**n, d, d)
    gram: np.ndarray
    gram_cho: tuple

    def solve(self, rhs):
        """Apply the inverse Gram matrix; a diagonal Gram is divided out exactly."""
        diag = np.diag(self.gram)
        if np.array_equal(self.gram, np.diag(diag)):
            return rhs / diag
        return scipy.linalg.cho_solve(self.gram_cho, rhs)


def _block(top_left, top_right, bottom_left, bottom_right):
    return np.block([[top_left, top_right], [bottom_left, bottom_right]])


@functools.lru_cache(maxsize=None)
def build_generators(sig):
    """The generator matrices ``alpha^k * (Pauli block)`` for k = 1..n."""
    n = sig.n
    if not 1 <= n <= 4:
        raise UnsupportedDimension(f"no matrix representation for n={n}")
    alphas = tuple(1 if k <= sig.p else 1j for k in range(1, n + 1))
    zero = np.zeros((2, 2), dtype=complex)
    if n <= 2:
        base = [SIGMA[k] for k in range(1, n + 1)]
    else:
        base = [_block(SIGMA[k], zero, zero, -SIGMA[k]) for k in (1, 2, 3)]
        if n == 4:
            base.append(_block(zero, SIGMA[0], SIGMA[0], zero))
    mats = np.array([a * m for a, m in zip(alphas, base)])
    mats.setflags(write=False)
    return GeneratorSet(sig, mats, alphas)


@functools.lru_cache(maxsize=None)
def blade_rep_table(sig):
    gens = build_generators(sig).mats
    d = sig.rep_dim
    blades = np.empty((sig.size, d, d), dtype=complex)
    for a in range(sig.size):
        m = np.eye(d, dtype=complex)
        for k in range(sig.n):
            if a >> k & 1:
                m = m @ gens[k]
        blades[a] = m
    gram = np.einsum("aij,bij->ab", blades.conj(), blades)
    cho = scipy.linalg.cho_factor(gram)
    blades.setflags(write=False)
    gram.setflags(write=False)
    return BladeRepTable(sig, blades, gram, cho)


def represent(u):
    """The d x d matrix obtained by substituting generator matrices into ``u``."""
    table = blade_rep_table(u.sig)
    return np.einsum("a,aij->ij", u.coeffs, table.blades)


def reconstruct(m, sig, field=COMPLEX):
    """Multivector whose representation is ``m``.

    Solves the Frobenius least-squares problem against the blade matrices and
    refuses matrices that do not lie in the image of :func:`represent`.
    """
    field = ScalarField.parse(field)
    m = np.asarray(m, dtype=complex)
    d = sig.rep_dim
    if m.shape != (d, d):
        raise UnsupportedDimension(f"{sig} is represented by {d}x{d} matrices, got {m.shape}")
    table = blade_rep_table(sig)
    rhs = np.einsum("aij,ij->a", table.blades.conj(), m)
    coeffs = table.solve(rhs)
    residual = np.linalg.norm(m - np.einsum("a,aij->ij", coeffs, table.blades))
    if residual > RECONSTRUCT_RESIDUAL_TOL * (1 + np.linalg.norm(m)):
        raise NotInImage(f"matrix is not in the image of {sig} (residual {residual:.3g})", residual)
    if field is REAL:
        if np.max(np.abs(coeffs.imag)) > IMAG_TRUNCATION_TOL:
            raise FieldViolation("reconstructed coefficients are not real")
        coeffs = coeffs.real
    return Multivector(sig, coeffs, field)
