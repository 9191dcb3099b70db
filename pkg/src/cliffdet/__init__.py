"""Determinant, spectrum, inverse and Hermitian conjugation in Cl(p,q), p + q <= 4."""
from .algebra import (
    ALL_SIGNATURES,
    COMPLEX,
    REAL,
    Multivector,
    ScalarField,
    Signature,
    add,
    blade_name,
    blade_product,
    clifford_conj,
    conj,
    grade,
    grade_involution,
    mul,
    mul_table,
    pseudoscalar,
    random_multivector,
    reversion,
    scale,
    trace,
)
from .det_spectrum import (
    char_poly,
    det,
    det_degree,
    det_intrinsic,
    det_matrix,
    inverse,
    is_invertible,
    omega,
    spectrum,
)
from .errors import *  # noqa: F401,F403
from .expr import eval_text, parse, to_text
from .hermitian import (
    SignatureClass,
    classify,
    hconj,
    hconj_intrinsic,
    hconj_matrix,
    is_hermitian,
    random_hermitian,
)
from .matrix_rep import build_generators, blade_rep_table, reconstruct, represent

__version__ = "0.1.0"
