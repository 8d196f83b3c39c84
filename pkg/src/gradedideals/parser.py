"""Recursive-descent parser for polynomials and ideal lists.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := power (('*' power) | ('/' NUMBER) | implicit)*
    power  := atom ('^' NUMBER)?
    atom   := NUMBER | VARIABLE | '(' expr ')'

``implicit`` multiplication is allowed only directly after a number
(``2x``, ``3/2y^2``); ``x y`` is rejected. Positions are 1-based.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .ring import Polynomial, PolynomialRing

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9_]*)|(.))")


def tokenize(text: str) -> list:
    """Tokens as (kind, value, position) with kind in {num, var, op, end}."""
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), m.start(1) + 1))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), m.start(2) + 1))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3) + 1, text)
            tokens.append(("op", ch, m.start(3) + 1))
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolynomialRing):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, tok[2], self.text)

    def expect(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise self.error(f"expected {want}, got {got}")
        return self.advance()

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise self.error("empty input")
        f = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise self.error(f"unexpected {tok[1]!r}")
        return f

    def expr(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.advance()
            sign = -1 if tok[1] == "-" else 1
        f = self.term()
        if sign < 0:
            f = -f
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.advance()
                g = self.term()
                f = f + g if tok[1] == "+" else f - g
            else:
                return f

    def term(self) -> Polynomial:
        f, last_was_number = self.power()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.advance()
                g, last_was_number = self.power()
                f = f * g
            elif tok[0] == "op" and tok[1] == "/":
                self.advance()
                num = self.expect("num")
                if num[1] == 0:
                    raise self.error("division by zero", num)
                f = f * self.ring.constant(Fraction(1, num[1]))
                last_was_number = True
            elif tok[0] == "var" or (tok[0] == "op" and tok[1] == "("):
                if not last_was_number:
                    raise self.error("implicit multiplication; use '*'")
                g, last_was_number = self.power()
                f = f * g
            elif tok[0] == "num":
                raise self.error("implicit multiplication; use '*'")
            else:
                return f

    def power(self):
        base, is_number = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.advance()
            exp = self.peek()
            if exp[0] != "num":
                raise self.error("malformed exponent; expected a nonnegative integer")
            self.advance()
            return base ** exp[1], is_number
        return base, is_number

    def atom(self):
        tok = self.peek()
        if tok[0] == "num":
            self.advance()
            return self.ring.constant(tok[1]), True
        if tok[0] == "var":
            self.advance()
            if tok[1] not in self.ring.variables:
                raise self.error(f"unknown variable {tok[1]!r}", tok)
            return self.ring.gen(tok[1]), False
        if tok[0] == "op" and tok[1] == "(":
            self.advance()
            f = self.expr()
            self.expect("op", ")")
            return f, False
        if tok[0] == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {tok[1]!r}")


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    try:
        return _Parser(text, ring).parse()
    except ZeroDivisionError as exc:
        raise ParseError(f"coefficient not defined in {ring.field}: {exc}") from None


def split_top_level(text: str, sep: str = ",") -> list:
    """Split on ``sep`` outside parentheses; returns (piece, offset) pairs."""
    pieces, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            pieces.append((text[start:i], start))
            start = i + 1
    pieces.append((text[start:], start))
    return pieces


def parse_polynomial_list(text: str, ring: PolynomialRing) -> list:
    """Comma-separated polynomials; error positions refer to the whole string."""
    if not text.strip():
        return []
    out = []
    for piece, offset in split_top_level(text):
        try:
            out.append(parse_polynomial(piece, ring))
        except ParseError as exc:
            pos = None if exc.position is None else exc.position + offset
            raise ParseError(exc.message, pos, text) from None
    return out
