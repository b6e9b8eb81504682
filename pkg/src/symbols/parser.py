"""
Recursive-descent parser for symbol expressions.

Grammar:
    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := "-"? power
    power  := atom ("^" factor)?
    atom   := NUMBER | "x" | IDENT "(" expr ("," expr)? ")" | "(" expr ")"

Precedence is ^ > unary minus > * / > + -, and ^ is right-associative.
Error offsets are byte offsets into the UTF-8 encoded input.
"""

import re
from dataclasses import dataclass
from typing import List, Optional

from fuzzywuzzy import process

from .errors import ArityError, ExpressionSyntaxError, UnknownIdentifierError
from .expression import FUNCTIONS, BinOp, Call, Expr, Neg, Num, Var
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

# Minimum fuzzy score for an identifier suggestion
SUGGESTION_MIN_SCORE = 60

_TOKEN_PATTERN = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<number>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^(),])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str    # "number", "ident", "op" or "end"
    text: str
    offset: int  # byte offset


def _byte_offset(text: str, char_offset: int) -> int:
    return len(text[:char_offset].encode("utf-8"))


def tokenize(text: str) -> List[Token]:
    """Split symbol text into tokens, ending with an "end" token."""
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_PATTERN.match(text, pos)
        if match is None:
            raise ExpressionSyntaxError(
                f"Unexpected character {text[pos]!r}", _byte_offset(text, pos)
            )
        kind = match.lastgroup
        if kind != "space":
            tokens.append(Token(kind, match.group(), _byte_offset(text, pos)))
        pos = match.end()
    tokens.append(Token("end", "", _byte_offset(text, len(text))))
    return tokens


def suggest_identifier(name: str) -> Optional[str]:
    """Closest supported identifier to `name`, if any is close enough."""
    choices = sorted(FUNCTIONS) + ["x"]
    best = process.extractOne(name, choices)
    if best and best[1] >= SUGGESTION_MIN_SCORE:
        return best[0]
    return None


class _Parser:
    """Single-use parser over a token list."""

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != "end":
            self.pos += 1
        return token

    def accept(self, text: str) -> bool:
        if self.current.kind == "op" and self.current.text == text:
            self.advance()
            return True
        return False

    def expect(self, text: str) -> Token:
        token = self.current
        if token.kind == "op" and token.text == text:
            return self.advance()
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise ExpressionSyntaxError(f"Expected '{text}', found {found}", token.offset)

    def parse_expr(self) -> Expr:
        left = self.parse_term()
        while self.current.kind == "op" and self.current.text in "+-":
            op = self.advance().text
            left = BinOp(op, left, self.parse_term())
        return left

    def parse_term(self) -> Expr:
        left = self.parse_factor()
        while self.current.kind == "op" and self.current.text in "*/":
            op = self.advance().text
            left = BinOp(op, left, self.parse_factor())
        return left

    def parse_factor(self) -> Expr:
        if self.accept("-"):
            return Neg(self.parse_power())
        return self.parse_power()

    def parse_power(self) -> Expr:
        base = self.parse_atom()
        if self.accept("^"):
            # right operand is a factor: 2^-x and 2^3^2 = 2^(3^2)
            return BinOp("^", base, self.parse_factor())
        return base

    def parse_atom(self) -> Expr:
        token = self.current
        if token.kind == "number":
            self.advance()
            return Num(float(token.text))
        if token.kind == "ident":
            return self.parse_identifier()
        if token.kind == "op" and token.text == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect(")")
            return inner
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise ExpressionSyntaxError(f"Expected operand, found {found}", token.offset)

    def parse_identifier(self) -> Expr:
        token = self.advance()
        name = token.text
        if name == "x":
            return Var()
        if name not in FUNCTIONS:
            raise UnknownIdentifierError(name, token.offset, suggest_identifier(name))
        self.expect("(")
        args = [self.parse_expr()]
        while self.accept(","):
            args.append(self.parse_expr())
        self.expect(")")
        if len(args) != FUNCTIONS[name]:
            raise ArityError(name, FUNCTIONS[name], len(args), token.offset)
        return Call(name, tuple(args))


def parse(text: str) -> Expr:
    """
    Parse symbol text into an expression tree.

    Args:
        text: Expression such as "sqrt(x+1)" or "2*x - log(cosh(x-10)) + 100"

    Returns:
        Expression tree

    Raises:
        ExpressionSyntaxError: Malformed input (with byte offset)
        UnknownIdentifierError: Identifier other than x or a supported function
        ArityError: Wrong number of function arguments
    """
    parser = _Parser(tokenize(text))
    tree = parser.parse_expr()
    if parser.current.kind != "end":
        token = parser.current
        raise ExpressionSyntaxError(f"Unexpected {token.text!r}", token.offset)
    logger.debug(f"Parsed symbol {text!r}")
    return tree
