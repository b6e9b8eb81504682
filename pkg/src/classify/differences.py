"""
Finite-difference route: signs of D_n(x, t) = sum_k (-1)^k C(n, k) phi(x + k t).

D_n >= 0 for all x, t >= 0 is equivalent to (-1)^n phi^(n) >= 0, so this
route checks the same classes as the derivative route without using jets.
It also accepts plain vectorised callables, which is how non-smooth symbols
are classified.
"""

from enum import Enum
from math import comb
from typing import Callable, NamedTuple, Sequence, Union

import numpy as np

from ..symbols import Expr, evaluate
from ..symbols.expression import BinOp, Call, Neg, Num, Var
from .config import DEFAULT_TOL
from .models import OrderSign, Verdict
from .signs import order_sign, required_sign

SymbolLike = Union[Expr, Callable[[np.ndarray], np.ndarray]]

_EXPR_TYPES = (Num, Var, Neg, BinOp, Call)


class Direction(str, Enum):
    """Required sign of D_n."""
    NON_NEGATIVE = ">=0"
    NON_POSITIVE = "<=0"

    @property
    def sign(self) -> int:
        return 1 if self is Direction.NON_NEGATIVE else -1


class XTPairs(NamedTuple):
    """Sample pairs (x_i, t_i), ordered by x then t."""
    x: np.ndarray
    t: np.ndarray

    def __len__(self) -> int:
        return int(self.x.size)


def as_function(symbol: SymbolLike) -> Callable[[np.ndarray], np.ndarray]:
    """Vectorised evaluator for an expression or a callable."""
    if isinstance(symbol, _EXPR_TYPES):
        return lambda x: np.asarray(evaluate(symbol, x), dtype=float)
    if callable(symbol):
        return lambda x: np.broadcast_to(
            np.asarray(symbol(np.asarray(x, dtype=float)), dtype=float), np.shape(x)
        )
    raise TypeError(f"Expected an expression or a callable, got {type(symbol).__name__}")


def difference_pairs(points: Sequence[float], t_values: Sequence[float], n: int, x_max: float) -> XTPairs:
    """
    All pairs (x, t) from the grid with x + n*t <= x_max.

    Raises:
        ValueError: no pair fits inside [0, x_max]
    """
    points = np.asarray(points, dtype=float)
    steps = np.asarray(t_values, dtype=float)
    xs = np.repeat(points, steps.size)
    ts = np.tile(steps, points.size)
    keep = xs + n * ts <= x_max * (1 + 1e-12)
    if not np.any(keep):
        raise ValueError(f"No (x, t) pairs satisfy x + {n}*t <= {x_max}")
    return XTPairs(xs[keep], ts[keep])


def _as_pairs(pairs) -> XTPairs:
    if isinstance(pairs, XTPairs):
        return pairs
    data = np.asarray(pairs, dtype=float).reshape(-1, 2)
    return XTPairs(data[:, 0], data[:, 1])


def alternating_sum(symbol: SymbolLike, n: int, pairs) -> np.ndarray:
    """D_n evaluated at every pair."""
    if n < 0:
        raise ValueError(f"Difference order must be non-negative, got {n}")
    pairs = _as_pairs(pairs)
    if np.any(pairs.x < 0) or np.any(pairs.t < 0):
        raise ValueError("x and t must be non-negative")
    f = as_function(symbol)
    total = np.zeros_like(pairs.x)
    for k in range(n + 1):
        total = total + (-1) ** k * comb(n, k) * f(pairs.x + k * pairs.t)
    return total


def difference_sign(symbol: SymbolLike, n: int, pairs, tol: float = DEFAULT_TOL) -> OrderSign:
    """Sign verdict of D_n over the pairs, witnesses carrying (x, t)."""
    pairs = _as_pairs(pairs)
    values = alternating_sum(symbol, n, pairs)
    return order_sign(values, pairs.x, n, tol, steps=pairs.t)


def finite_difference_check(
    symbol: SymbolLike,
    n: int,
    pairs,
    direction: Direction,
    tol: float = DEFAULT_TOL,
) -> Verdict:
    """
    Check the sign of D_n against the requested direction.

    An identically zero D_n (within the band) Holds in both directions.

    Example:
        >>> finite_difference_check(parse("x+1"), 1, pairs, Direction.NON_POSITIVE).status
        <VerdictStatus.HOLDS: 'Holds'>
    """
    direction = Direction(direction)
    return required_sign(difference_sign(symbol, n, pairs, tol), direction.sign)
