"""
Symbol expressions: parsing, printing and jet evaluation.
"""

from .errors import (
    ArityError,
    ExpressionSyntaxError,
    JetOrderError,
    PositivityError,
    SymbolDomainError,
    UnknownIdentifierError,
)
from .evaluate import K_MAX, derivative, eval_jet, evaluate
from .expression import BinOp, Call, Expr, Neg, Num, Var, node_count, to_text
from .jet import Jet
from .parser import parse, tokenize

__all__ = [
    'ArityError',
    'ExpressionSyntaxError',
    'JetOrderError',
    'PositivityError',
    'SymbolDomainError',
    'UnknownIdentifierError',
    'K_MAX',
    'derivative',
    'eval_jet',
    'evaluate',
    'BinOp',
    'Call',
    'Expr',
    'Neg',
    'Num',
    'Var',
    'node_count',
    'to_text',
    'Jet',
    'parse',
    'tokenize',
]
