"""
Expression tree for closed-form symbols φ(x).

Nodes are frozen dataclasses, so trees are hashable and compare structurally.
`to_text` prints a tree in a form that `parse` reads back to an identical tree.
"""

import math
from dataclasses import dataclass
from typing import Tuple, Union


# Supported functions and their arity
FUNCTIONS = {
    "exp": 1,
    "log": 1,
    "sqrt": 1,
    "sinh": 1,
    "cosh": 1,
    "tanh": 1,
    "pow": 2,
}

BINARY_OPERATORS = ("+", "-", "*", "/", "^")


@dataclass(frozen=True)
class Num:
    """Non-negative real literal (negation is a separate node)."""
    value: float

    def __post_init__(self):
        value = float(self.value)
        if not math.isfinite(value) or value < 0:
            raise ValueError(f"Literal must be finite and non-negative, got {self.value!r}")
        object.__setattr__(self, "value", value)

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Var:
    """The independent variable x."""

    def __str__(self) -> str:
        return "x"


@dataclass(frozen=True)
class Neg:
    """Unary negation."""
    operand: "Expr"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class BinOp:
    """Binary operation; `op` is one of + - * / ^."""
    op: str
    left: "Expr"
    right: "Expr"

    def __post_init__(self):
        if self.op not in BINARY_OPERATORS:
            raise ValueError(f"Unknown operator: {self.op!r}")

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Call:
    """Function application, e.g. sqrt(x + 1) or pow(x, 2)."""
    name: str
    args: Tuple["Expr", ...]

    def __post_init__(self):
        if self.name not in FUNCTIONS:
            raise ValueError(f"Unknown function: {self.name!r}")
        object.__setattr__(self, "args", tuple(self.args))
        if len(self.args) != FUNCTIONS[self.name]:
            raise ValueError(
                f"Function '{self.name}' takes {FUNCTIONS[self.name]} argument(s), "
                f"got {len(self.args)}"
            )

    def __str__(self) -> str:
        return to_text(self)


Expr = Union[Num, Var, Neg, BinOp, Call]


def _format_number(value: float) -> str:
    if value.is_integer() and value < 1e16:
        return str(int(value))
    return repr(value)


def _wrap(e: Expr) -> str:
    text = to_text(e)
    if isinstance(e, (BinOp, Neg)):
        return f"({text})"
    return text


def to_text(e: Expr) -> str:
    """
    Pretty-print an expression.

    Every compound operand is parenthesised, so precedence never has to be
    reconstructed and parse(to_text(e)) == e.

    Example:
        >>> to_text(BinOp("+", Var(), Num(1)))
        'x + 1'
    """
    if isinstance(e, Num):
        return _format_number(e.value)
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Neg):
        return f"-{_wrap(e.operand)}"
    if isinstance(e, BinOp):
        return f"{_wrap(e.left)} {e.op} {_wrap(e.right)}"
    if isinstance(e, Call):
        return f"{e.name}({', '.join(to_text(a) for a in e.args)})"
    raise TypeError(f"Not an expression node: {e!r}")


def node_count(e: Expr) -> int:
    """Number of nodes in the tree."""
    if isinstance(e, Neg):
        return 1 + node_count(e.operand)
    if isinstance(e, BinOp):
        return 1 + node_count(e.left) + node_count(e.right)
    if isinstance(e, Call):
        return 1 + sum(node_count(a) for a in e.args)
    return 1


def integer_exponent(e: Expr):
    """
    Return the integer value of a literal exponent, or None.

    Accepts `Num(k)` and `Neg(Num(k))` with integral k.
    """
    if isinstance(e, Num) and e.value.is_integer():
        return int(e.value)
    if isinstance(e, Neg) and isinstance(e.operand, Num) and e.operand.value.is_integer():
        return -int(e.operand.value)
    return None
