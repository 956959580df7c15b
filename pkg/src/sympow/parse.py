"""Recursive-descent parser for the polynomial input grammar.

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' nat)?
    base   := variable | integer | '(' expr ')'

Whitespace is insignificant; integer literals are the only coefficient
syntax (rationals never appear in input); unary minus is allowed only at
the head of an expression (including directly inside parentheses).
"""

from __future__ import annotations

from .errors import ParseError
from .poly import Polynomial, RingSpec

_MAX_EXPONENT = 10**6


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.token = None
        self.token_pos = 0
        self.advance()

    def advance(self):
        text, n = self.text, len(self.text)
        i = self.pos
        while i < n and text[i].isspace():
            i += 1
        self.token_pos = i
        if i >= n:
            self.token = None
            self.pos = i
            return
        ch = text[i]
        if ch in "+-*^()":
            self.token = ch
            self.pos = i + 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            self.token = text[i:j]
            self.pos = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            self.token = text[i:j]
            self.pos = j
        else:
            raise ParseError(f"unexpected character {ch!r}", i)


class _Parser:
    def __init__(self, text: str, ring: RingSpec):
        self.lex = _Lexer(text)
        self.ring = ring

    def parse(self) -> Polynomial:
        value = self.expr()
        if self.lex.token is not None:
            raise ParseError(f"unexpected token {self.lex.token!r}", self.lex.token_pos)
        return value

    def expr(self) -> Polynomial:
        negate = False
        if self.lex.token == "-":
            negate = True
            self.lex.advance()
        value = self.term()
        if negate:
            value = -value
        while self.lex.token in ("+", "-"):
            op = self.lex.token
            self.lex.advance()
            rhs = self.term()
            value = value - rhs if op == "-" else value + rhs
        return value

    def term(self) -> Polynomial:
        value = self.factor()
        while self.lex.token == "*":
            self.lex.advance()
            value = value * self.factor()
        return value

    def factor(self) -> Polynomial:
        value = self.base()
        if self.lex.token == "^":
            self.lex.advance()
            tok, pos = self.lex.token, self.lex.token_pos
            if tok is None or not tok.isdigit():
                raise ParseError("expected a non-negative integer exponent", pos)
            n = int(tok)
            if n > _MAX_EXPONENT:
                raise ParseError(f"exponent {n} exceeds the parser limit", pos)
            self.lex.advance()
            value = value ** n
        return value

    def base(self) -> Polynomial:
        tok, pos = self.lex.token, self.lex.token_pos
        if tok is None:
            raise ParseError("unexpected end of input", pos)
        if tok == "(":
            self.lex.advance()
            value = self.expr()
            if self.lex.token != ")":
                raise ParseError("expected ')'", self.lex.token_pos)
            self.lex.advance()
            return value
        if tok.isdigit():
            self.lex.advance()
            return self.ring.constant(int(tok))
        if tok[0].isalpha() or tok[0] == "_":
            if tok not in self.ring.variables:
                raise ParseError(f"unknown variable {tok!r}", pos)
            self.lex.advance()
            return self.ring.var(tok)
        raise ParseError(f"unexpected token {tok!r}", pos)


def parse_poly(text: str, ring: RingSpec) -> Polynomial:
    """Parse ``text`` into a canonical polynomial of ``ring``."""
    return _Parser(text, ring).parse()


def parse_gens(text: str, ring: RingSpec) -> list[Polynomial]:
    """Parse a comma-separated generator list (commas never occur inside
    the polynomial grammar, so splitting is unambiguous)."""
    items = [part for part in text.split(",") if part.strip()]
    return [parse_poly(part, ring) for part in items]
