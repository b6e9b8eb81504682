"""
Jet evaluation of expression trees.

Example: derivative(parse("log(x+2)"), 1.0, 2) is -1/9 up to rounding.
"""

from typing import Union

import numpy as np

from .errors import JetOrderError
from .expression import BinOp, Call, Expr, Neg, Num, Var, integer_exponent
from .jet import Jet, domain_error

# Highest supported derivative order
K_MAX = 16

ArrayLike = Union[float, np.ndarray]


def _power(base: Expr, exponent: Expr, x: Jet) -> Jet:
    n = integer_exponent(exponent)
    if n is not None:
        return _eval(base, x).int_power(n)
    return _eval(base, x).power(_eval(exponent, x))


def _eval(e: Expr, x: Jet) -> Jet:
    if isinstance(e, Num):
        return Jet.constant(e.value, x.base_point, x.order)
    if isinstance(e, Var):
        return x
    if isinstance(e, Neg):
        return -_eval(e.operand, x)
    if isinstance(e, BinOp):
        if e.op == "^":
            return _power(e.left, e.right, x)
        left = _eval(e.left, x)
        right = _eval(e.right, x)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        if e.op == "*":
            return left * right
        return left / right
    if isinstance(e, Call):
        if e.name == "pow":
            return _power(e.args[0], e.args[1], x)
        arg = _eval(e.args[0], x)
        return getattr(arg, e.name)()
    raise TypeError(f"Not an expression node: {e!r}")


def eval_jet(e: Expr, x0: ArrayLike, order: int) -> Jet:
    """
    Evaluate an expression as a Taylor jet.

    Args:
        e: Expression tree
        x0: Base point (scalar or array; arrays are evaluated elementwise)
        order: Jet order K, 0 <= K <= K_MAX

    Returns:
        Jet with coeffs[k] = e^(k)(x0) / k!

    Raises:
        JetOrderError: order outside [0, K_MAX]
        SymbolDomainError: log/sqrt of a non-positive value, division by zero,
            or a non-finite result
    """
    if not 0 <= order <= K_MAX:
        raise JetOrderError(f"Jet order must be between 0 and {K_MAX}, got {order}")
    x = Jet.variable(np.asarray(x0, dtype=float), order)
    jet = _eval(e, x)
    bad = ~np.all(np.isfinite(jet.coeffs), axis=0)
    if np.any(bad):
        raise domain_error("Expression is not finite", bad, jet.base_point)
    return jet


def derivative(e: Expr, x0: ArrayLike, k: int) -> ArrayLike:
    """k-th derivative of the expression at x0 (k! times the jet coefficient)."""
    values = eval_jet(e, x0, k).derivatives[k]
    return float(values) if values.ndim == 0 else values


def evaluate(e: Expr, x: ArrayLike) -> ArrayLike:
    """Pointwise value of the expression (order-0 jet)."""
    values = eval_jet(e, x, 0).coeffs[0]
    return float(values) if values.ndim == 0 else np.array(values)
