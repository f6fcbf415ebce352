"""Text format for polynomials.

Grammar (whitespace is ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'x' | 'y' | '(' expr ')'

Division is only allowed by a nonzero constant, which covers ``3/2*x``.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomial import BiPoly

__all__ = ["PolySyntaxError", "UnknownVariable", "parse_poly", "render_poly", "format_coeff"]


class PolySyntaxError(ValueError):
    """Malformed polynomial text. ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, text: str, offset: int):
        self.text = text
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


class UnknownVariable(PolySyntaxError):
    def __init__(self, name: str, text: str, offset: int):
        self.name = name
        super().__init__(f"unknown variable {name!r}", text, offset)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.data = text.encode("utf-8")
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.data) and self.data[self.pos] in b" \t\r\n":
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        if self.pos >= len(self.data):
            return ""
        return chr(self.data[self.pos])

    def error(self, message: str):
        raise PolySyntaxError(message, self.text, self.pos)

    def parse(self) -> BiPoly:
        if not self.peek():
            self.error("empty expression")
        value = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return value

    def expr(self) -> BiPoly:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> BiPoly:
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.peek()
            self.pos += 1
            start = self.pos
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if not rhs.is_constant():
                    raise PolySyntaxError("division by a non-constant", self.text, start)
                c = rhs.coeff(0, 0)
                if not c:
                    raise PolySyntaxError("division by zero", self.text, start)
                value = value.scale(1 / c)
        return value

    def unary(self) -> BiPoly:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return -self.unary()
        if ch == "+":
            self.pos += 1
            return self.unary()
        return self.power()

    def power(self) -> BiPoly:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            if not self.peek().isdigit():
                self.error("expected a non-negative integer exponent")
            base = base ** self._integer()
        return base

    def _integer(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.data) and chr(self.data[self.pos]).isdigit():
            self.pos += 1
        return int(self.data[start:self.pos])

    def atom(self) -> BiPoly:
        ch = self.peek()
        if not ch:
            self.error("unexpected end of input")
        if ch.isdigit():
            return BiPoly.const(self._integer())
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return value
        if ch == "x":
            self.pos += 1
            return BiPoly.x()
        if ch == "y":
            self.pos += 1
            return BiPoly.y()
        if ch.isalpha() or ch == "_" or ord(ch) >= 0x80:
            start = self.pos
            while self.pos < len(self.data) and (chr(self.data[self.pos]).isalnum() or self.data[self.pos] >= 0x80):
                self.pos += 1
            name = self.data[start:self.pos].decode("utf-8", errors="replace")
            raise UnknownVariable(name, self.text, start)
        self.error(f"unexpected {ch!r}")


def parse_poly(text: str) -> BiPoly:
    """Parse ``text`` into a BiPoly.

    >>> str(parse_poly("3/2*x^2*y - 1"))
    '3/2*x^2*y - 1'
    """
    return _Parser(text).parse()


def format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _monomial_text(i: int, j: int) -> str:
    parts = []
    if j:
        parts.append("x" if j == 1 else f"x^{j}")
    if i:
        parts.append("y" if i == 1 else f"y^{i}")
    return "*".join(parts)


def render_poly(p: BiPoly) -> str:
    """Render in the parser's grammar, highest total degree first."""
    if p.is_zero():
        return "0"
    order = sorted(p.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][1]))
    out = []
    for k, ((i, j), c) in enumerate(order):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = _monomial_text(i, j)
        if not mono:
            body = format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_coeff(mag)}*{mono}"
        if k == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
