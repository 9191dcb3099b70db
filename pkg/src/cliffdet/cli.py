"""Command-line front end.

Usage::

    cliffdet det --signature 1,0 --field real "e1"
    cliffdet spectrum --signature 0,1 "e1"
    cliffdet hconj --signature 1,3 "e2 + i*e12"

Every invocation writes one JSON (or text) document to standard output.
Errors are written to standard error as a JSON record, with exit code 1 for
bad input, 2 for numerical failures and 3 for internal inconsistencies.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import det_spectrum, hermitian
from .algebra import Multivector, ScalarField, Signature, blade_name
from .errors import CliffordError, InputError, InternalInconsistency, NumericalError
from .expr import eval_text, to_text
from .matrix_rep import represent

SCHEMA = "cliffdet/1"
TEXT_ZERO = 1e-12
PATH_TOL = 1e-10

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERICAL = 2
EXIT_INTERNAL = 3

COMMANDS = ("det", "spectrum", "hconj", "inverse", "eval", "repr")


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _pair(z):
    z = complex(z)
    return [z.real + 0.0, z.imag + 0.0]


def _multivector(u):
    return {
        "coefficients": {blade_name(a): _pair(c) for a, c in enumerate(u.coeffs)},
        "expr": to_text(u),
    }


def _max_diff(u, v):
    return float(np.max(np.abs(u.coeffs - v.coeffs)))


def cmd_det(u):
    intrinsic = det_spectrum.det_intrinsic(u)
    matrix = det_spectrum.det_matrix(u)
    return (
        {"intrinsic": _pair(intrinsic), "matrix": _pair(matrix)},
        {"residual": abs(intrinsic - matrix), "tolerance": PATH_TOL},
    )


def cmd_spectrum(u):
    values = det_spectrum.spectrum(u)
    d = det_spectrum.det_intrinsic(u)
    return (
        {"eigenvalues": [_pair(z) for z in values]},
        {
            "product_residual": abs(np.prod(values) - d),
            "sum_residual": abs(np.sum(values) - u.sig.rep_dim * u.trace()),
        },
    )


def cmd_hconj(u):
    intrinsic = hermitian.hconj_intrinsic(u)
    matrix = hermitian.hconj_matrix(u)
    return (
        {"intrinsic": _multivector(intrinsic), "matrix": _multivector(matrix)},
        {"residual": _max_diff(intrinsic, matrix), "tolerance": PATH_TOL},
    )


def cmd_inverse(u):
    inv = det_spectrum.inverse(u)
    one = Multivector.scalar(u.sig, 1, u.field)
    return _multivector(inv), {"identity_residual": _max_diff(u * inv, one)}


def cmd_eval(u):
    return _multivector(u), {}


def cmd_repr(u):
    m = represent(u)
    return {"dim": m.shape[0], "matrix": [[_pair(z) for z in row] for row in m]}, {}


HANDLERS = {
    "det": cmd_det,
    "spectrum": cmd_spectrum,
    "hconj": cmd_hconj,
    "inverse": cmd_inverse,
    "eval": cmd_eval,
    "repr": cmd_repr,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--signature", required=True, help="p,q with 1 <= p+q <= 4")
    common.add_argument("--field", default="complex", choices=["real", "complex"])
    common.add_argument("--format", default="json", choices=["json", "text"])
    common.add_argument("--seed", type=int, default=None, help="reserved")
    common.add_argument("expression")
    parser = _ArgumentParser(prog="cliffdet", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def _text_number(x):
    x = float(x)
    return "0" if abs(x) < TEXT_ZERO else repr(x + 0.0)


def _text_value(value):
    if isinstance(value, dict) and "coefficients" in value:
        terms = []
        for name, (re_part, im_part) in value["coefficients"].items():
            if abs(re_part) < TEXT_ZERO and abs(im_part) < TEXT_ZERO:
                continue
            terms.append(f"{name}: {_text_complex(re_part, im_part)}")
        return "{" + ", ".join(terms) + "}" if terms else "0"
    if isinstance(value, list) and len(value) == 2 and all(isinstance(x, float) for x in value):
        return _text_complex(*value)
    if isinstance(value, list):
        return "[" + ", ".join(_text_value(v) for v in value) + "]"
    if isinstance(value, float):
        return _text_number(value)
    return str(value)


def _text_complex(re_part, im_part):
    if abs(im_part) < TEXT_ZERO:
        return _text_number(re_part)
    if abs(re_part) < TEXT_ZERO:
        return f"{_text_number(im_part)}i"
    return f"{_text_number(re_part)}{'+' if im_part >= 0 else '-'}{_text_number(abs(im_part))}i"


def render(record, fmt):
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    lines = [
        f"command: {record['command']}",
        f"input: {record['input']}",
        f"signature: Cl({record['signature']['p']},{record['signature']['q']})",
        f"field: {record['field']}",
    ]
    result = record["result"]
    items = result.items() if isinstance(result, dict) and "coefficients" not in result else [
        ("result", result)
    ]
    lines += [f"{key}: {_text_value(value)}" for key, value in items]
    lines += [f"{key}: {_text_value(value)}" for key, value in record["diagnostics"].items()]
    return "\n".join(lines) + "\n"


def execute(command, expression, sig, field):
    """Build the output record for one command without touching any stream."""
    u = eval_text(expression, sig, field)
    result, diagnostics = HANDLERS[command](u)
    return {
        "schema": SCHEMA,
        "command": command,
        "input": expression,
        "signature": {"p": sig.p, "q": sig.q},
        "field": field.value,
        "result": result,
        "diagnostics": diagnostics,
    }


def exit_code_for(exc):
    if isinstance(exc, InternalInconsistency):
        return EXIT_INTERNAL
    if isinstance(exc, NumericalError):
        return EXIT_NUMERICAL
    return EXIT_INPUT


def run(argv=None, stdout=None, stderr=None):
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
        sig = Signature.parse(args.signature)
        field = ScalarField.parse(args.field)
        record = execute(args.command, args.expression, sig, field)
    except CliffordError as exc:
        code = exit_code_for(exc)
        error = {"type": type(exc).__name__, "message": str(exc)}
        if getattr(exc, "position", None) is not None:
            error["position"] = exc.position
        stderr.write(json.dumps({"schema": SCHEMA, "error": error, "exit_code": code}) + "\n")
        return code
    stdout.write(render(record, args.format))
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
