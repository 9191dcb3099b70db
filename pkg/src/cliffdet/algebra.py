"""Multivectors of the Clifford algebras Cl(p,q), p + q <= 4.

A multivector over ``n`` generators holds ``2**n`` coefficients. The blade
index is a bitmask: bit ``k-1`` set means the generator ``e^k`` is a factor,
so index 0 is the scalar part, ``0b011`` is ``e12`` and ``0b1111`` is
``e1234``. Coefficients are always stored as complex numbers; a real-field
multivector simply keeps every imaginary part at exactly zero.
"""
from __future__ import annotations

import enum
import functools
import numbers
from dataclasses import dataclass

import numpy as np

from .errors import (
    FieldViolation,
    GradeOutOfRange,
    SignatureMismatch,
    UnsupportedDimension,
)

MAX_GENERATORS = 4


class ScalarField(enum.Enum):
    REAL = "real"
    COMPLEX = "complex"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise FieldViolation(f"unknown scalar field {value!r}") from None


REAL = ScalarField.REAL
COMPLEX = ScalarField.COMPLEX


@dataclass(frozen=True)
class Signature:
    """Metric signature: ``p`` generators square to +1, then ``q`` square to -1."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or not 1 <= self.p + self.q <= MAX_GENERATORS:
            raise UnsupportedDimension(
                f"Cl({self.p},{self.q}) is outside 1 <= p+q <= {MAX_GENERATORS}"
            )

    @classmethod
    def parse(cls, text):
        """Build from ``"p,q"``."""
        try:
            p, q = (int(part) for part in str(text).split(","))
        except ValueError:
            raise UnsupportedDimension(f"signature must look like 'p,q', got {text!r}") from None
        return cls(p, q)

    @property
    def n(self):
        return self.p + self.q

    @property
    def size(self):
        """Number of basis blades, ``2**n``."""
        return 1 << self.n

    @property
    def rep_dim(self):
        """Side length of the matrix representation."""
        return 2 if self.n <= 2 else 4

    @property
    def det_eta(self):
        return -1 if self.q % 2 else 1

    def eta(self, k):
        """Diagonal metric entry for generator ``e^k`` (1-based)."""
        if not 1 <= k <= self.n:
            raise GradeOutOfRange(f"generator e{k} does not exist in {self}")
        return 1 if k <= self.p else -1

    def __str__(self):
        return f"Cl({self.p},{self.q})"


ALL_SIGNATURES = tuple(
    Signature(p, n - p) for n in range(1, MAX_GENERATORS + 1) for p in range(n, -1, -1)
)


def grade_of(blade):
    return int(blade).bit_count()


def blade_name(blade):
    """``0 -> '1'``, ``0b101 -> 'e13'``."""
    if blade == 0:
        return "1"
    return "e" + "".join(str(k + 1) for k in range(MAX_GENERATORS) if blade >> k & 1)


def blade_product(a, b, sig):
    """Product of two basis blades as ``(factor, blade)`` with ``factor`` in {+1, -1}.

    The sign counts the transpositions needed to sort the generators of ``a``
    followed by those of ``b``; every generator shared by both then squares to
    its metric entry.
    """
    swaps = 0
    for bit in range(sig.n):
        if b >> bit & 1:
            swaps += (a >> (bit + 1)).bit_count()
    factor = -1 if swaps % 2 else 1
    common = a & b
    for bit in range(sig.n):
        if common >> bit & 1:
            factor *= sig.eta(bit + 1)
    return factor, a ^ b


@dataclass(frozen=True)
class MulTable:
    """Precomputed blade products of one signature.

    ``result[a, b]`` is ``a ^ b`` and ``factor[a, b]`` its sign; ``tensor`` is
    the dense structure-constant array used by :func:`mul`.
    """

    sig: Signature
    result: np.ndarray
    factor: np.ndarray
    tensor: np.ndarray


@functools.lru_cache(maxsize=None)
def mul_table(sig):
    size = sig.size
    result = np.zeros((size, size), dtype=np.intp)
    factor = np.zeros((size, size), dtype=np.int8)
    tensor = np.zeros((size, size, size))
    for a in range(size):
        for b in range(size):
            f, c = blade_product(a, b, sig)
            result[a, b] = c
            factor[a, b] = f
            tensor[a, b, c] = f
    for arr in (result, factor, tensor):
        arr.setflags(write=False)
    return MulTable(sig, result, factor, tensor)


@functools.lru_cache(maxsize=None)
def _grades(size):
    out = np.array([grade_of(a) for a in range(size)])
    out.setflags(write=False)
    return out


def _is_real_scalar(c):
    return isinstance(c, numbers.Real) or complex(c).imag == 0


class Multivector:
    """An element of Cl(p,q) over the real or complex numbers.

    Instances are immutable. Arithmetic operators follow the algebra: ``*`` is
    the Clifford product (or scaling by a number), ``+``/``-`` are linear, and
    dividing by a number scales.
    """

    __slots__ = ("sig", "field", "coeffs")

    def __init__(self, sig, coeffs, field=COMPLEX):
        field = ScalarField.parse(field)
        arr = np.array(coeffs, dtype=complex).reshape(-1)
        if arr.size != sig.size:
            raise ValueError(f"{sig} needs {sig.size} coefficients, got {arr.size}")
        if field is REAL and np.any(arr.imag != 0):
            raise FieldViolation("real multivector with non-zero imaginary part")
        arr.setflags(write=False)
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    @classmethod
    def zero(cls, sig, field=COMPLEX):
        return cls(sig, np.zeros(sig.size), field)

    @classmethod
    def scalar(cls, sig, value=1, field=COMPLEX):
        return cls.blade(sig, 0, value, field)

    @classmethod
    def blade(cls, sig, index, value=1, field=COMPLEX):
        if not 0 <= index < sig.size:
            raise GradeOutOfRange(f"blade index {index} outside {sig}")
        coeffs = np.zeros(sig.size, dtype=complex)
        coeffs[index] = value
        return cls(sig, coeffs, field)

    @classmethod
    def generator(cls, sig, k, field=COMPLEX):
        """The generator ``e^k`` (1-based)."""
        sig.eta(k)
        return cls.blade(sig, 1 << (k - 1), 1, field)

    def __getitem__(self, blade):
        return complex(self.coeffs[blade])

    def _like(self, coeffs):
        return Multivector(self.sig, coeffs, self.field)

    def __add__(self, other):
        if isinstance(other, numbers.Number):
            other = Multivector.scalar(self.sig, _field_scalar(other, self.field), self.field)
        return add(self, other) if isinstance(other, Multivector) else NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return self._like(-self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (numbers.Number, Multivector)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return mul(self, other)
        if isinstance(other, numbers.Number):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return scale(other, self)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Number):
            return scale(1 / other, self)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return (
            self.sig == other.sig
            and self.field is other.field
            and np.array_equal(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def grade(self, r):
        return grade(self, r)

    def trace(self):
        return trace(self)

    def involute(self):
        return grade_involution(self)

    def reverse(self):
        return reversion(self)

    def conj(self):
        return conj(self)

    def clifford_conj(self):
        return clifford_conj(self)

    def max_abs(self):
        return float(np.max(np.abs(self.coeffs)))

    def scalar_residue(self):
        """Largest magnitude among the non-scalar coefficients."""
        return float(np.max(np.abs(self.coeffs[1:]))) if self.sig.size > 1 else 0.0

    def allclose(self, other, tol=1e-12):
        """Componentwise ``|a - b| <= tol * (1 + max magnitude of both)``."""
        _check_compatible(self, other)
        bound = tol * (1 + max(self.max_abs(), other.max_abs()))
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= bound)

    def items(self):
        """``(blade_name, coefficient)`` for every non-zero coefficient."""
        return [
            (blade_name(a), complex(c)) for a, c in enumerate(self.coeffs) if c != 0
        ]

    def __repr__(self):
        terms = ", ".join(f"{name}: {c:g}" for name, c in self.items()) or "0"
        return f"Multivector({self.sig}, {self.field.value}, {{{terms}}})"


def _field_scalar(c, field):
    if field is REAL:
        if not _is_real_scalar(c):
            raise FieldViolation(f"complex scalar {c!r} in a real multivector")
        return complex(c).real
    return complex(c)


def _check_compatible(u, v):
    if u.sig != v.sig:
        raise SignatureMismatch(f"{u.sig} vs {v.sig}")
    if u.field is not v.field:
        raise SignatureMismatch(f"{u.field.value} vs {v.field.value} scalars")


def add(u, v):
    _check_compatible(u, v)
    return u._like(u.coeffs + v.coeffs)


def scale(c, u):
    c = _field_scalar(c, u.field)
    return u._like(c * u.coeffs)


def mul(u, v):
    """Clifford product."""
    _check_compatible(u, v)
    table = mul_table(u.sig)
    out = np.einsum("a,b,abc->c", u.coeffs, v.coeffs, table.tensor)
    if u.field is REAL:
        out = out.real
    return u._like(out)


def grade(u, r):
    """Projection onto the grade-``r`` blades."""
    if not 0 <= r <= u.sig.n:
        raise GradeOutOfRange(f"grade {r} outside 0..{u.sig.n}")
    keep = _grades(u.sig.size) == r
    return u._like(np.where(keep, u.coeffs, 0))


def trace(u):
    return complex(u.coeffs[0])


def _grade_signs(size, sign_of_grade):
    return np.array([sign_of_grade(r) for r in _grades(size)])


def grade_involution(u):
    """``e^k -> -e^k``: grade ``r`` picks up ``(-1)**r``."""
    return u._like(u.coeffs * _grade_signs(u.sig.size, lambda r: (-1) ** r))


def reversion(u):
    """Reverse generator order in every blade: grade ``r`` picks up ``(-1)**(r(r-1)/2)``."""
    return u._like(u.coeffs * _grade_signs(u.sig.size, lambda r: (-1) ** (r * (r - 1) // 2)))


def conj(u):
    return u._like(np.conj(u.coeffs))


def clifford_conj(u):
    return reversion(conj(u))


def pseudoscalar(sig, field=COMPLEX):
    return Multivector.blade(sig, sig.size - 1, 1, field)


def random_multivector(sig, field=COMPLEX, rng=None, bound=1.0):
    """Coefficients drawn uniformly from ``[-bound, bound]`` (real and imaginary parts)."""
    rng = np.random.default_rng(rng)
    field = ScalarField.parse(field)
    coeffs = rng.uniform(-bound, bound, sig.size).astype(complex)
    if field is COMPLEX:
        coeffs += 1j * rng.uniform(-bound, bound, sig.size)
    return Multivector(sig, coeffs, field)
