"""Exit criteria. Each test reports one PASS/FAIL line with the worst observed value."""
import io
import json
import pathlib

import numpy as np

from cliffdet import (
    ALL_SIGNATURES,
    COMPLEX,
    REAL,
    Multivector,
    Signature,
    blade_rep_table,
    build_generators,
    det_degree,
    det_intrinsic,
    det_matrix,
    hconj_intrinsic,
    hconj_matrix,
    inverse,
    is_invertible,
    omega,
    random_hermitian,
    random_multivector,
    reconstruct,
    represent,
    spectrum,
)
from cliffdet.cli import run
from cliffdet.det_spectrum import shift
from cliffdet.errors import NotInvertible
from cliffdet.expr import eval_text, to_text

GOLDEN = pathlib.Path(__file__).parent / "golden"
FIELDS = (REAL, COMPLEX)
SAMPLES = 1000

REPORT = []


def report(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    REPORT.append(line)
    print(line)
    assert ok, line


def cases():
    for sig in ALL_SIGNATURES:
        for field in FIELDS:
            yield sig, field, np.random.default_rng([sig.p, sig.q, field is COMPLEX])


def max_abs(u):
    return float(np.max(np.abs(u.coeffs)))


def rel_diff(a, b):
    return float(np.max(np.abs(a.coeffs - b.coeffs))) / (1 + max(max_abs(a), max_abs(b)))


def test_1_generator_relations():
    failures = 0
    for sig in ALL_SIGNATURES:
        mats = build_generators(sig).mats
        eye = np.eye(sig.rep_dim)
        for k in range(sig.n):
            for l in range(sig.n):
                expected = 2 * (sig.eta(k + 1) if k == l else 0) * eye
                failures += not np.array_equal(mats[k] @ mats[l] + mats[l] @ mats[k], expected)
    report(1, "generator anticommutation, exact", failures == 0, f"{failures} violations")


def test_2_determinant_paths_agree():
    worst = purity = 0.0
    for sig, field, rng in cases():
        for _ in range(SAMPLES):
            u = random_multivector(sig, field, rng)
            dm = det_matrix(u)
            worst = max(worst, abs(det_intrinsic(u) - dm) / (1 + abs(dm)))
            om = omega(u)
            if sig.n <= 2:
                purity = max(purity, om.scalar_residue())
            elif sig.n == 3:
                purity = max(purity, (om.reverse() * om).scalar_residue())
    ok = worst <= 1e-10 and purity <= 1e-10
    report(2, "intrinsic Det = matrix det", ok, f"worst rel {worst:.2e}, purity {purity:.2e}")


def test_3_determinant_properties():
    mult = homog = idem = inv_err = 0.0
    refused = True
    one_exact = all(
        det_intrinsic(Multivector.scalar(sig, 1, f)) == 1 for sig in ALL_SIGNATURES for f in FIELDS
    )
    for sig, field, rng in cases():
        k = det_degree(sig.n)
        one = Multivector.scalar(sig, 1, field)
        for _ in range(200):
            u = random_multivector(sig, field, rng)
            v = random_multivector(sig, field, rng)
            du, dv = det_intrinsic(u), det_intrinsic(v)
            mult = max(mult, abs(det_intrinsic(u * v) - du * dv) / (1 + abs(du) * abs(dv)))
            beta = rng.uniform(-2, 2) + (1j * rng.uniform(-2, 2) if field is COMPLEX else 0)
            rhs = beta**k * du
            homog = max(homog, abs(det_intrinsic(beta * u) - rhs) / (1 + abs(rhs)))
            if abs(du) > 0.1:
                inv = inverse(u)
                inv_err = max(inv_err, max_abs(u * inv - one), max_abs(inv * u - one))
        for j in range(1, sig.p + 1):
            for sign in (1, -1):
                e = (one + sign * Multivector.generator(sig, j, field)) / 2
                idem = max(idem, abs(det_intrinsic(e)))
                refused &= not is_invertible(e)
                try:
                    inverse(e)
                    refused = False
                except NotInvertible:
                    pass
    ok = one_exact and mult <= 1e-9 and homog <= 1e-10 and idem <= 1e-12 and refused
    ok = ok and inv_err <= 1e-9
    detail = (
        f"Det(1)=1 {one_exact}, mult {mult:.2e}, homog {homog:.2e}, "
        f"idempotent Det {idem:.2e} refused {refused}, inverse {inv_err:.2e}"
    )
    report(3, "Det multiplicative, homogeneous, invertibility", ok, detail)


def test_4_hermitian_paths_agree():
    worst = anti = invol = 0.0
    for sig, field, rng in cases():
        for i in range(SAMPLES):
            u = random_multivector(sig, field, rng)
            h = hconj_intrinsic(u)
            worst = max(worst, float(np.max(np.abs(h.coeffs - hconj_matrix(u).coeffs))))
            invol = max(invol, rel_diff(hconj_intrinsic(h), u))
            if i < 200:
                v = random_multivector(sig, field, rng)
                anti = max(anti, rel_diff(hconj_intrinsic(u * v), hconj_intrinsic(v) * h))
    ok = worst <= 1e-10 and anti <= 1e-12 and invol <= 1e-12
    detail = f"paths {worst:.2e}, (UV)^+ {anti:.2e}, U^++ {invol:.2e}"
    report(4, "intrinsic U^+ = matrix U^+", ok, detail)


def test_5_hermitian_real_spectrum():
    worst = 0.0
    for sig in ALL_SIGNATURES:
        for field in FIELDS:
            for seed in range(100):
                values = spectrum(random_hermitian(sig, field, seed))
                worst = max(worst, float(np.max(np.abs(values.imag))))
    report(5, "Hermitian elements have real spectrum", worst <= 1e-9, f"max |Im| {worst:.2e}")


def test_6_spectrum_consistency():
    prod = total = defect = 0.0
    for sig, field, rng in cases():
        for _ in range(100):
            u = random_multivector(sig, field, rng)
            values = spectrum(u)
            d = det_intrinsic(u)
            prod = max(prod, abs(np.prod(values) - d) / (1 + abs(d)))
            total = max(total, abs(np.sum(values) - sig.rep_dim * u.trace()))
            for lam in values:
                defect = max(defect, abs(det_intrinsic(shift(u, lam))) / (1 + abs(d)))
    e1 = Multivector.generator(Signature(1, 0), 1)
    f1 = Multivector.generator(Signature(0, 1), 1)
    closed = max(
        float(np.max(np.abs(spectrum(e1) - [-1, 1]))),
        float(np.max(np.abs(spectrum(f1) - [-1j, 1j]))),
    )
    ok = prod <= 1e-8 and total <= 1e-9 and defect <= 1e-7 and closed <= 1e-12
    detail = f"prod {prod:.2e}, sum {total:.2e}, defect {defect:.2e}, closed forms {closed:.2e}"
    report(6, "spectrum consistent with Det and Tr", ok, detail)


def test_7_trace_identities():
    comm = sim = 0.0
    for sig, field, rng in cases():
        for _ in range(200):
            u = random_multivector(sig, field, rng)
            v = random_multivector(sig, field, rng)
            comm = max(comm, abs((u * v - v * u).trace()))
            w = random_multivector(sig, field, rng)
            if is_invertible(w) and abs(det_intrinsic(w)) > 1e-3:
                sim = max(sim, abs((inverse(w) * u * w).trace() - u.trace()))
    ok = comm <= 1e-12 and sim <= 1e-9
    report(7, "Tr(UV-VU)=0 and Tr(W^-1 U W)=Tr(U)", ok, f"{comm:.2e}, {sim:.2e}")


def test_8_representation_faithful():
    hom = trip = 0.0
    traces_zero = True
    for sig, field, rng in cases():
        for _ in range(200):
            u = random_multivector(sig, field, rng)
            v = random_multivector(sig, field, rng)
            lhs, rhs = represent(u * v), represent(u) @ represent(v)
            hom = max(hom, float(np.max(np.abs(lhs - rhs))) / (1 + float(np.max(np.abs(rhs)))))
            trip = max(trip, rel_diff(reconstruct(represent(u), sig, field), u))
        blades = blade_rep_table(sig).blades
        traces_zero &= all(np.trace(blades[a]) == 0 for a in range(1, sig.size))
    ok = hom <= 1e-12 and trip <= 1e-12 and traces_zero
    detail = f"homomorphism {hom:.2e}, round trip {trip:.2e}, traceless blades {traces_zero}"
    report(8, "representation faithful", ok, detail)


GOLDEN_CASES = [
    (["det", "--signature", "1,0", "--field", "real", "e1"], 0, "det_cl10_e1.json", "stdout"),
    (
        ["spectrum", "--signature", "0,1", "--field", "real", "e1"],
        0,
        "spectrum_cl01_e1.json",
        "stdout",
    ),
    (["det", "--signature", "2,0", "e5"], 1, "det_cl20_e5.stderr.json", "stderr"),
]


def _invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, {"stdout": out.getvalue(), "stderr": err.getvalue()}


def test_9_cli_transcripts():
    identical = True
    for argv, code, name, stream in GOLDEN_CASES:
        golden = (GOLDEN / name).read_text()
        for _ in range(2):
            got_code, streams = _invoke(argv)
            identical &= got_code == code and streams[stream] == golden
    det = json.loads((GOLDEN / "det_cl10_e1.json").read_text())
    identical &= det["result"]["intrinsic"] == [-1.0, 0.0] and det["diagnostics"]["residual"] <= 1e-12
    eig = json.loads((GOLDEN / "spectrum_cl01_e1.json").read_text())
    identical &= eig["result"]["eigenvalues"] == [[0.0, -1.0], [0.0, 1.0]]

    round_trip = True
    for sig, field, rng in cases():
        for _ in range(50):
            u = random_multivector(sig, field, rng)
            first = to_text(u)
            back = eval_text(first, sig, field)
            round_trip &= np.array_equal(back.coeffs, u.coeffs) and to_text(back) == first
    ok = identical and round_trip
    report(9, "CLI golden transcripts and print/parse round trip", ok, f"{identical=}, {round_trip=}")

