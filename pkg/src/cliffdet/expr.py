"""Multivector expressions: tokenizer, recursive-descent parser, evaluator and printer.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := ['-'] atom postfix*
    atom    := number | imaginary | blade | '(' expr ')'
    postfix := '^' | '~' | "'" | '!'
    blade   := 'e' digit+            (digits strictly ascending)
    number  := digits ['.' digits] | '.' digits
    imaginary := number 'i' | 'i'

Postfix operators are grade involution (``^``), reversion (``~``),
Clifford conjugation (``'``) and Hermitian conjugation (``!``). There is no
implicit multiplication and no exponent notation, so ``3e1`` is rejected.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .algebra import COMPLEX, REAL, Multivector, ScalarField, blade_name
from .errors import BladeOutOfRange, FieldViolation, NonCanonicalBlade, ParseError
from .hermitian import hconj_intrinsic


@dataclass(frozen=True)
class Number:
    value: complex


@dataclass(frozen=True)
class Blade:
    index: int


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Postfix:
    op: str
    operand: object


@dataclass(frozen=True)
class Token:
    kind: str  # 'num', 'imag', 'blade', 'op', 'end'
    text: str
    pos: int


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+(?:\.\d*)?|\.\d+)i?)
  | (?P<blade>e\d+)
  | (?P<imag>i)
  | (?P<op>[-+*()^~'!])
    """,
    re.VERBOSE,
)


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos}", pos, "a token")
        kind = m.lastgroup
        if kind != "ws":
            if kind == "num" and m.group().endswith("i"):
                kind = "imag"
            if kind in ("num", "imag") and m.end() < len(text) and (
                text[m.end()].isalnum() or text[m.end()] in "._"
            ):
                raise ParseError(
                    f"number at {pos} must be followed by an operator; write '*' explicitly",
                    m.end(),
                    "operator",
                )
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class Parser:
    """Recursive-descent parser bound to one signature and scalar field."""

    def __init__(self, text, sig, field=COMPLEX):
        self.text = text
        self.sig = sig
        self.field = ScalarField.parse(field)
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text):
        if self.tok.text != text:
            raise ParseError(f"expected {text!r} at {self.tok.pos}", self.tok.pos, repr(text))
        return self.advance()

    def parse(self):
        if not self.text.strip():
            raise ParseError("empty expression", 0, "an expression")
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(
                f"unexpected {self.tok.text!r} at {self.tok.pos}", self.tok.pos, "operator or end"
            )
        return node

    def expr(self):
        node = self.term()
        while self.tok.text in ("+", "-"):
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.tok.text == "*":
            self.advance()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        negate = False
        if self.tok.text == "-":
            self.advance()
            negate = True
        node = self.atom()
        while self.tok.text in ("^", "~", "'", "!"):
            node = Postfix(self.advance().text, node)
        return Neg(node) if negate else node

    def atom(self):
        tok = self.tok
        if tok.kind == "num":
            self.advance()
            return Number(complex(float(tok.text)))
        if tok.kind == "imag":
            if self.field is REAL:
                raise FieldViolation(f"imaginary literal {tok.text!r} at {tok.pos} in a real algebra")
            self.advance()
            mantissa = tok.text[:-1]
            return Number(complex(0.0, float(mantissa) if mantissa else 1.0))
        if tok.kind == "blade":
            self.advance()
            return Blade(self.blade_index(tok))
        if tok.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(
            f"expected a number, blade or '(' at {tok.pos}", tok.pos, "number, blade or '('"
        )

    def blade_index(self, tok):
        digits = [int(ch) for ch in tok.text[1:]]
        for k in digits:
            if not 1 <= k <= self.sig.n:
                raise BladeOutOfRange(
                    f"{tok.text} at {tok.pos}: e{k} does not exist in {self.sig}", tok.pos, None
                )
        if any(a >= b for a, b in zip(digits, digits[1:])):
            raise NonCanonicalBlade(
                f"{tok.text} at {tok.pos}: generator digits must strictly increase", tok.pos, None
            )
        return sum(1 << (k - 1) for k in digits)


def parse(text, sig, field=COMPLEX):
    return Parser(text, sig, field).parse()


_POSTFIX = {
    "^": Multivector.involute,
    "~": Multivector.reverse,
    "'": Multivector.clifford_conj,
    "!": hconj_intrinsic,
}


def evaluate(node, sig, field=COMPLEX):
    field = ScalarField.parse(field)
    if isinstance(node, Number):
        value = node.value.real if field is REAL else node.value
        return Multivector.scalar(sig, value, field)
    if isinstance(node, Blade):
        return Multivector.blade(sig, node.index, 1, field)
    if isinstance(node, Neg):
        return -evaluate(node.operand, sig, field)
    if isinstance(node, Postfix):
        return _POSTFIX[node.op](evaluate(node.operand, sig, field))
    if isinstance(node, BinOp):
        left = evaluate(node.left, sig, field)
        right = evaluate(node.right, sig, field)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right
    raise TypeError(f"not an expression node: {node!r}")


def eval_text(text, sig, field=COMPLEX):
    return evaluate(parse(text, sig, field), sig, field)


def format_real(x):
    """Shortest positional decimal that reads back as the same float."""
    x = float(x) + 0.0
    if not np.isfinite(x):
        raise ValueError(f"cannot print non-finite coefficient {x}")
    text = np.format_float_positional(x, unique=True, trim="-")
    return text


def _format_coefficient(c, field):
    if field is REAL or c.imag == 0:
        return format_real(c.real)
    if c.real == 0:
        return format_real(c.imag) + "i"
    re_part = format_real(c.real)
    im_part = format_real(c.imag)
    sign = "" if im_part.startswith("-") else "+"
    return f"({re_part}{sign}{im_part}i)"


def _format_term(c, index, field):
    coef = _format_coefficient(c, field)
    if index == 0:
        return coef
    if coef in ("1", "-1"):
        return coef[:-1] + blade_name(index)
    return f"{coef}*{blade_name(index)}"


def to_text(u):
    """Canonical expression for ``u`` that parses back to identical coefficients."""
    terms = []
    for index, c in enumerate(u.coeffs):
        if c == 0:
            continue
        terms.append(_format_term(complex(c), index, u.field))
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out
