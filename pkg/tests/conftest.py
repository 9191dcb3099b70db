import itertools
import sys

import numpy as np
import pytest
from hypothesis import strategies as st

from cliffdet import ALL_SIGNATURES, COMPLEX, REAL, Multivector

FIELDS = (REAL, COMPLEX)
SIG_IDS = [f"{s.p}{s.q}" for s in ALL_SIGNATURES]


@pytest.fixture(params=ALL_SIGNATURES, ids=SIG_IDS)
def sig(request):
    return request.param


@pytest.fixture(params=FIELDS, ids=["real", "complex"])
def field(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def signatures_and_fields():
    return list(itertools.product(ALL_SIGNATURES, FIELDS))


finite = st.floats(min_value=-2, max_value=2, allow_nan=False, allow_infinity=False)


@st.composite
def multivectors(draw, sig=None, field=None):
    sig = draw(st.sampled_from(ALL_SIGNATURES)) if sig is None else sig
    field = draw(st.sampled_from(FIELDS)) if field is None else field
    re = draw(st.lists(finite, min_size=sig.size, max_size=sig.size))
    coeffs = np.array(re, dtype=complex)
    if field is COMPLEX:
        im = draw(st.lists(finite, min_size=sig.size, max_size=sig.size))
        coeffs = coeffs + 1j * np.array(im)
    return Multivector(sig, coeffs, field)


@st.composite
def multivector_tuples(draw, count):
    sig = draw(st.sampled_from(ALL_SIGNATURES))
    field = draw(st.sampled_from(FIELDS))
    return tuple(draw(multivectors(sig, field)) for _ in range(count))


def close(a, b, tol):
    """Componentwise closeness scaled by the operands' magnitude."""
    a = np.asarray(getattr(a, "coeffs", a))
    b = np.asarray(getattr(b, "coeffs", b))
    bound = tol * (1 + max(np.max(np.abs(a)), np.max(np.abs(b))))
    return np.max(np.abs(a - b)) <= bound


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
