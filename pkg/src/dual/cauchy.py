"""
Cauchy dual S_t' = S_t (S_t* S_t)^{-1} of a weighted translation semigroup.

The dual is again a weighted translation semigroup, with symbol 1/phi and
weight 1/phi_t on x >= t.
"""

from typing import Dict, Sequence

import numpy as np

from ..operators import Grid, SampledFunction, ZeroWeightError, positive_values, weight
from ..symbols import BinOp, Expr, Num
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

# Margins below this are reported as "not left-invertible at tested scale"
MARGIN_FLOOR = 1e-12


def dual_symbol(e_phi: Expr) -> Expr:
    """Symbol of the Cauchy dual semigroup, 1/phi."""
    return BinOp("/", Num(1), e_phi)


def left_inv_margin(e_phi: Expr, t_grid: Sequence[float], g: Grid) -> Dict[float, float]:
    """
    Per t, the minimum of phi(x+t)/phi(x) over the grid nodes.

    S_t is left invertible when this infimum is positive; a margin of at
    least 1 - tol means S_t is an expansion (the hyperexpansive case).

    Raises:
        PositivityError: phi not positive at some x or x + t
    """
    x = g.nodes
    base = positive_values(e_phi, x)
    margins = {}
    for t in t_grid:
        t = float(t)
        if t < 0:
            raise ValueError(f"t must be non-negative, got {t}")
        margin = float(np.min(positive_values(e_phi, x + t) / base))
        if margin < MARGIN_FLOOR:
            logger.warning(f"t={t:g}: margin {margin:.3g} -- not left-invertible at tested scale")
        margins[t] = margin
    return margins


def is_left_invertible(margins: Dict[float, float]) -> bool:
    return all(m >= MARGIN_FLOOR for m in margins.values())


def certifies_hyperexpansive(margins: Dict[float, float], tol: float = 1e-9) -> bool:
    """Every margin at least 1 - tol."""
    return all(m >= 1.0 - tol for m in margins.values())


def apply_dual(e_phi: Expr, t: float, f: SampledFunction) -> SampledFunction:
    """
    (S_t' f)(x_i) = f(x_i - t) / phi_t(x_i) for x_i >= t, else 0.

    Raises:
        ZeroWeightError: phi_t vanishes at some node x_i >= t
    """
    grid = f.grid
    k = grid.shift_index(t)
    w = weight(e_phi, t, grid).values
    out = np.zeros_like(f.values)
    if k < grid.n_points:
        tail = w[k:]
        zero = np.flatnonzero(tail == 0)
        if zero.size:
            index = k + int(zero[0])
            raise ZeroWeightError(index, float(grid.nodes[index]))
        out[k:] = f.values[:grid.n_points - k] / tail
    return f.with_values(out)


def apply_gram_inverse(e_phi: Expr, t: float, f: SampledFunction) -> SampledFunction:
    """((S_t* S_t)^{-1} f)(x) = phi(x) / phi(x + t) * f(x)."""
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    x = f.grid.nodes
    ratio = positive_values(e_phi, x) / positive_values(e_phi, x + t)
    return f.with_values(ratio * f.values)
