"""
Polynomial text parser.

Grammar (whitespace insignificant):
    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' factor) | ('/' nat))*
    factor := atom ('^' nat)?
    atom   := nat | var | '(' expr ')'
    var    := t1 | t2 | x1 | x2 | x3 | u | v | w | u' | v' | w'

The leading minus, '/ nat' and the primed names extend the basic grammar so that every
canonically printed polynomial parses back to itself.
"""

import re
from fractions import Fraction
from typing import List, NamedTuple

from ga3_bundles.algebra.polynomial import VARIABLE_INDEX, Polynomial
from ga3_bundles.errors import (
    NegativeExponentError,
    PolynomialSyntaxError,
    UnknownVariableError,
)


_TOKEN_PATTERN = re.compile(r"(?P<nat>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*'?)|(?P<op>[-+*^/()])")
_WHITESPACE = re.compile(r"\s+")


class Token(NamedTuple):
    kind: str  # "nat" | "name" | "op" | "end"
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Split text into tokens; any other character is a syntax error."""
    tokens = []
    pos = 0
    while pos < len(text):
        space = _WHITESPACE.match(text, pos)
        if space:
            pos = space.end()
            continue
        match = _TOKEN_PATTERN.match(text, pos)
        if not match:
            raise PolynomialSyntaxError(f"Unexpected character {text[pos]!r}", pos, text)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), pos))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class PolynomialParser:
    """Recursive-descent parser producing canonical Polynomials."""

    def parse(self, text: str) -> Polynomial:
        self._text = text
        self._tokens = tokenize(text)
        self._index = 0
        result = self._expr()
        token = self._peek()
        if token.kind != "end":
            raise PolynomialSyntaxError(f"Unexpected {token.text!r}", token.position, text)
        return result

    # --- Token helpers ---

    def _peek(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _accept(self, op: str) -> bool:
        token = self._peek()
        if token.kind == "op" and token.text == op:
            self._index += 1
            return True
        return False

    def _error(self, message: str, token: Token) -> PolynomialSyntaxError:
        found = "end of input" if token.kind == "end" else repr(token.text)
        return PolynomialSyntaxError(f"{message}, found {found}", token.position, self._text)

    def _nat(self, context: str) -> int:
        token = self._peek()
        if token.kind == "op" and token.text == "-" and context == "exponent":
            raise NegativeExponentError("Negative exponent", token.position, self._text)
        if token.kind != "nat":
            raise self._error(f"Expected a natural number as {context}", token)
        self._advance()
        return int(token.text)

    # --- Grammar rules ---

    def _expr(self) -> Polynomial:
        negate = self._accept("-")
        result = self._term()
        if negate:
            result = -result
        while True:
            if self._accept("+"):
                result = result + self._term()
            elif self._accept("-"):
                result = result - self._term()
            else:
                return result

    def _term(self) -> Polynomial:
        result = self._factor()
        while True:
            if self._accept("*"):
                result = result * self._factor()
            elif self._accept("/"):
                token = self._peek()
                divisor = self._nat("divisor")
                if divisor == 0:
                    raise PolynomialSyntaxError("Division by zero", token.position, self._text)
                result = result * Fraction(1, divisor)
            else:
                return result

    def _factor(self) -> Polynomial:
        base = self._atom()
        if self._accept("^"):
            return base ** self._nat("exponent")
        return base

    def _atom(self) -> Polynomial:
        token = self._peek()
        if token.kind == "nat":
            self._advance()
            return Polynomial.constant(int(token.text))
        if token.kind == "name":
            self._advance()
            if token.text not in VARIABLE_INDEX:
                raise UnknownVariableError(f"Unknown variable {token.text!r}", token.position, self._text)
            return Polynomial.variable(token.text)
        if self._accept("("):
            inner = self._expr()
            if not self._accept(")"):
                raise self._error("Expected ')'", self._peek())
            return inner
        raise self._error("Expected a number, variable or '('", token)


def parse(text: str) -> Polynomial:
    """Parse polynomial text (see module docstring for the grammar)."""
    return PolynomialParser().parse(text)
