"""Recursive-descent parser for polynomial expressions in z0, z1, ...

Grammar (``^`` binds tighter than unary minus, which binds tighter than ``*``)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | VAR | '(' expr ')'

Juxtaposition (``2z0``, ``(z0)(z1)``) is a syntax error.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from .errors import ExpressionSyntaxError, NonHomogeneousError, UnknownVariableError
from .polynomial import HomPolynomial

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^/()]))")
_VAR = re.compile(r"z(0|[1-9]\d*)")


class Token(NamedTuple):
    kind: str  # "int", "var", "op", "end"
    text: str
    pos: int


def tokenize(text: str, nvars: int) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        value = m.group(m.lastgroup)
        if m.lastgroup == "name":
            vm = _VAR.fullmatch(value)
            if not vm or int(vm.group(1)) >= nvars:
                names = ", ".join(f"z{i}" for i in range(nvars))
                raise UnknownVariableError(f"unknown variable {value!r}; expected one of {names}", start)
            tokens.append(Token("var", value, start))
        else:
            tokens.append(Token(m.lastgroup, value, start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# Intermediate, possibly inhomogeneous polynomials: {exponent: Fraction}.
def _add(p: dict, q: dict, sign: int = 1) -> dict:
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.nvars = nvars
        self.tokens = tokenize(text, nvars)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def _accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def _fail(self, expected: str):
        t = self.tok
        got = "end of input" if t.kind == "end" else repr(t.text)
        raise ExpressionSyntaxError(f"expected {expected}, got {got}", t.pos)

    def parse(self) -> dict:
        p = self.expr()
        if self.tok.kind != "end":
            self._fail("an operator or end of input")
        return p

    def expr(self) -> dict:
        p = self.term()
        while True:
            if self._accept("+"):
                p = _add(p, self.term())
            elif self._accept("-"):
                p = _add(p, self.term(), -1)
            else:
                return p

    def term(self) -> dict:
        p = self.unary()
        while self._accept("*"):
            p = _mul(p, self.unary())
        return p

    def unary(self) -> dict:
        if self._accept("-"):
            return {e: -c for e, c in self.unary().items()}
        if self._accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> dict:
        base = self.atom()
        if self._accept("^"):
            if self.tok.kind != "int":
                self._fail("a nonnegative integer exponent")
            k = int(self.tok.text)
            self.i += 1
            result = {(0,) * self.nvars: Fraction(1)}
            for _ in range(k):
                result = _mul(result, base)
            return result
        return base

    def atom(self) -> dict:
        t = self.tok
        one = (0,) * self.nvars
        if t.kind == "int":
            self.i += 1
            value = Fraction(int(t.text))
            if self._accept("/"):
                if self.tok.kind != "int":
                    self._fail("an integer denominator")
                den = int(self.tok.text)
                if den == 0:
                    raise ExpressionSyntaxError("zero denominator", self.tok.pos)
                self.i += 1
                value /= den
            return {one: value} if value else {}
        if t.kind == "var":
            self.i += 1
            e = [0] * self.nvars
            e[int(t.text[1:])] = 1
            return {tuple(e): Fraction(1)}
        if self._accept("("):
            p = self.expr()
            if not self._accept(")"):
                self._fail("')'")
            return p
        self._fail("a number, variable or '('")


def parse(text: str, nvars: int = 3) -> HomPolynomial:
    """Parse and expand ``text`` into a homogeneous polynomial in ``nvars`` variables.

    The zero polynomial parses with degree 0.
    """
    terms = _Parser(text, nvars).parse()
    degrees = sorted({sum(e) for e in terms})
    if len(degrees) > 1:
        raise NonHomogeneousError((degrees[0], degrees[-1]))
    degree = degrees[0] if degrees else 0
    return HomPolynomial(nvars, degree, terms)
