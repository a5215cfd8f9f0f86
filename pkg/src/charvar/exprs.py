"""Expression grammar for the CLI: polynomials in the trace coordinates.

Atoms are coordinates t1..t5 / t-1..t-4, non-negative rational literals
(``2``, ``1/3``) and trace atoms ``tr(x1 x2 x1^-1 x2^-1)``; operators are
+ - * ^ with standard precedence (^ binds tightest, then unary minus, then
*, then + and -, all left associative).  Exponents are non-negative
integer literals.  t-5 is not in the grammar: write P's alias explicitly
or use tr() with the reversed commutator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from . import words
from .polyring import NormalForm, check_coordinate, t


class ParseError(ValueError):
    """Syntax error with position and the expectation that failed."""

    def __init__(self, position: int, expected: str, found: str = ""):
        self.position = position
        self.expected = expected
        self.found = found
        where = f"at position {position}"
        tail = f", found {found!r}" if found else ""
        super().__init__(f"expected {expected} {where}{tail}")


# -- AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class Number:
    value: Fraction

    def to_text(self) -> str:
        if self.value.denominator == 1:
            return str(self.value.numerator)
        return f"{self.value.numerator}/{self.value.denominator}"


@dataclass(frozen=True)
class Coord:
    index: int

    def to_text(self) -> str:
        return f"t{self.index}"


@dataclass(frozen=True)
class Trace:
    word: Tuple[int, ...]

    def to_text(self) -> str:
        return f"tr({' '.join(words.word_to_str(self.word).split())})" if self.word else "tr()"


@dataclass(frozen=True)
class Neg:
    operand: "Expression"

    def to_text(self) -> str:
        inner = self.operand.to_text()
        if isinstance(self.operand, BinOp):
            inner = f"({inner})"
        return f"-{inner}"


@dataclass(frozen=True)
class Pow:
    base: "Expression"
    exponent: int

    def to_text(self) -> str:
        inner = self.base.to_text()
        if isinstance(self.base, (BinOp, Neg, Pow)):
            inner = f"({inner})"
        return f"{inner}^{self.exponent}"


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*'
    left: "Expression"
    right: "Expression"

    def to_text(self) -> str:
        left = self.left.to_text()
        right = self.right.to_text()
        if self.op == "*":
            if isinstance(self.left, BinOp) and self.left.op != "*":
                left = f"({left})"
            if isinstance(self.right, (BinOp, Neg)):
                right = f"({right})"
            return f"{left}*{right}"
        if isinstance(self.right, BinOp) and self.right.op != "*":
            right = f"({right})"
        if isinstance(self.right, Neg):
            right = f"({right})"
        return f"{left} {self.op} {right}"


Expression = Union[Number, Coord, Trace, Neg, Pow, BinOp]


# -- tokenizer -------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<tr>tr\s*\()
  | (?P<coord>t-?[1-5])
  | (?P<int>\d+)
  | (?P<op>[-+*^()/])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    value: str
    position: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(pos, "a coordinate, number, tr(...), or operator", text[pos])
        if match.lastgroup == "ws":
            pos = match.end()
            continue
        if match.lastgroup == "tr":
            close = text.find(")", match.end())
            if close < 0:
                raise ParseError(len(text), "')' closing tr(")
            body = text[match.end():close]
            tokens.append(_Token("trace", body, pos))
            pos = close + 1
            continue
        tokens.append(_Token(match.lastgroup, match.group(), pos))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.cursor = 0

    def peek(self) -> _Token:
        return self.tokens[self.cursor]

    def advance(self) -> _Token:
        token = self.tokens[self.cursor]
        self.cursor += 1
        return token

    def expect_op(self, symbol: str):
        token = self.peek()
        if token.kind != "op" or token.value != symbol:
            raise ParseError(token.position, f"'{symbol}'", token.value or "end of input")
        return self.advance()

    # expr := term (('+'|'-') term)*
    def expr(self) -> Expression:
        node = self.term()
        while self.peek().kind == "op" and self.peek().value in "+-":
            op = self.advance().value
            node = BinOp(op, node, self.term())
        return node

    # term := unary ('*' unary)*
    def term(self) -> Expression:
        node = self.unary()
        while self.peek().kind == "op" and self.peek().value == "*":
            self.advance()
            node = BinOp("*", node, self.unary())
        return node

    def unary(self) -> Expression:
        if self.peek().kind == "op" and self.peek().value == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    # power := atom ('^' INT)?
    def power(self) -> Expression:
        node = self.atom()
        if self.peek().kind == "op" and self.peek().value == "^":
            self.advance()
            token = self.peek()
            if token.kind != "int":
                raise ParseError(token.position, "a non-negative integer exponent", token.value or "end of input")
            self.advance()
            return Pow(node, int(token.value))
        return node

    def atom(self) -> Expression:
        token = self.peek()
        if token.kind == "int":
            self.advance()
            numerator = int(token.value)
            if self.peek().kind == "op" and self.peek().value == "/":
                self.advance()
                denom_token = self.peek()
                if denom_token.kind != "int":
                    raise ParseError(denom_token.position, "an integer denominator", denom_token.value or "end of input")
                self.advance()
                if int(denom_token.value) == 0:
                    raise ParseError(denom_token.position, "a nonzero denominator", denom_token.value)
                return Number(Fraction(numerator, int(denom_token.value)))
            return Number(Fraction(numerator))
        if token.kind == "coord":
            self.advance()
            index = int(token.value[1:])
            try:
                check_coordinate(index)
            except ValueError:
                raise ParseError(token.position, "a coordinate t1..t5 or t-1..t-4", token.value) from None
            return Coord(index)
        if token.kind == "trace":
            self.advance()
            try:
                word = words.parse_word(token.value)
            except words.WordError as exc:
                raise ParseError(token.position, f"a word ({exc})", token.value) from None
            return Trace(word)
        if token.kind == "op" and token.value == "(":
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError(token.position, "a coordinate, number, tr(...), or '('", token.value or "end of input")


def parse(text: str) -> Expression:
    parser = _Parser(text)
    node = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ParseError(trailing.position, "end of input", trailing.value)
    return node


def lower(expression: Expression) -> NormalForm:
    """Evaluate an AST into the quotient ring; Irreducible propagates."""
    if isinstance(expression, Number):
        return NormalForm.constant(expression.value)
    if isinstance(expression, Coord):
        return t(expression.index)
    if isinstance(expression, Trace):
        return words.trace_of(expression.word)
    if isinstance(expression, Neg):
        return -lower(expression.operand)
    if isinstance(expression, Pow):
        return lower(expression.base) ** expression.exponent
    if isinstance(expression, BinOp):
        left = lower(expression.left)
        right = lower(expression.right)
        if expression.op == "+":
            return left + right
        if expression.op == "-":
            return left - right
        return left * right
    raise TypeError(f"not an expression node: {expression!r}")


def lower_text(text: str) -> NormalForm:
    return lower(parse(text))
