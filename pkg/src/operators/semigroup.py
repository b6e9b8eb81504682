"""
Weighted translation semigroup on a uniform grid.

    (S_t f)(x)   = phi_t(x) f(x - t),            phi_t(x) = sqrt(phi(x)/phi(x-t)) for x >= t, else 0
    (S_t* f)(x)  = sqrt(phi(x+t)/phi(x)) f(x + t)

Shifts must be whole numbers of grid steps, so no interpolation is ever
needed. Reads beyond x_max (adjoint) are taken as zero.
"""

from dataclasses import dataclass
from math import comb
from typing import Callable

import numpy as np

from ..symbols import Expr, PositivityError, evaluate
from ..utils.logging_config import get_logger
from .grid import Grid, SampledFunction, inner

logger = get_logger(__name__)


def sample(e: Expr, g: Grid) -> SampledFunction:
    """
    Evaluate an expression at the grid nodes.

    Raises:
        SymbolDomainError: with the index of the first bad node
    """
    return SampledFunction(g, evaluate(e, g.nodes))


def positive_values(e: Expr, x: np.ndarray) -> np.ndarray:
    """phi(x), raising PositivityError at the first non-positive value."""
    values = np.asarray(evaluate(e, x), dtype=float)
    bad = np.flatnonzero(~(values > 0))
    if bad.size:
        i = int(bad[0])
        raise PositivityError("Symbol is not positive", index=i, x=float(np.reshape(x, -1)[i]))
    return values


def _weights(phi: np.ndarray, k: int) -> np.ndarray:
    w = np.zeros_like(phi)
    if k == 0:
        w[:] = 1.0
    elif k < phi.size:
        w[k:] = np.sqrt(phi[k:] / phi[:-k])
    return w


def weight(e_phi: Expr, t: float, g: Grid) -> SampledFunction:
    """
    Weight function phi_t on the grid.

    Raises:
        ShiftAlignmentError: t not grid-aligned
        PositivityError: phi not positive on the grid
    """
    k = g.shift_index(t)
    return SampledFunction(g, _weights(positive_values(e_phi, g.nodes), k))


def _shift_right(values: np.ndarray, k: int) -> np.ndarray:
    out = np.zeros_like(values)
    if k < values.size:
        out[k:] = values[:values.size - k]
    return out


def _shift_left(values: np.ndarray, k: int) -> np.ndarray:
    out = np.zeros_like(values)
    if k < values.size:
        out[:values.size - k] = values[k:]
    return out


def apply_st(e_phi: Expr, t: float, f: SampledFunction) -> SampledFunction:
    """(S_t f)(x_i) = phi_t(x_i) f(x_i - t) for x_i >= t, else 0."""
    w = weight(e_phi, t, f.grid).values
    k = f.grid.shift_index(t)
    return f.with_values(w * _shift_right(f.values, k))


def apply_adjoint(e_phi: Expr, t: float, f: SampledFunction) -> SampledFunction:
    """(S_t* f)(x_i) = phi_t(x_i + t) f(x_i + t); zero where x_i + t > x_max."""
    w = weight(e_phi, t, f.grid).values
    k = f.grid.shift_index(t)
    return f.with_values(_shift_left(w * f.values, k))


def power(op: Callable[[Expr, float, SampledFunction], SampledFunction],
          e_phi: Expr, t: float, f: SampledFunction, k: int) -> SampledFunction:
    """Apply an operator k times."""
    for _ in range(k):
        f = op(e_phi, t, f)
    return f


def multiplier_bn(e_phi: Expr, n: int, t: float, g: Grid) -> SampledFunction:
    """
    Multiplication symbol of B_n(S_t):

        m(x) = sum_k (-1)^k C(n, k) phi(x + k t) / phi(x)

    evaluated directly from the symbol on [0, x_max + n t].

    Raises:
        PositivityError: phi not positive on the extended range
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    x = g.nodes
    base = positive_values(e_phi, x)
    total = np.zeros_like(x)
    for k in range(n + 1):
        shifted = base if k == 0 else positive_values(e_phi, x + k * t)
        total += (-1) ** k * comb(n, k) * (shifted / base)
    return SampledFunction(g, total)


@dataclass(frozen=True)
class QuadFormResult:
    """
    <B_n(S_t) f, f> by two routes.

    Attributes:
        pencil: Binomial sum of <S_t*^k S_t^k f, f> from repeated operator application
        multiplier: <m_{n,t} f, f> from the multiplication symbol
        difference: pencil - multiplier
        scale: sum_k C(n, k) |<S_t*^k S_t^k f, f>|, for relative comparisons
    """
    pencil: float
    multiplier: float
    difference: float
    scale: float

    @property
    def relative_difference(self) -> float:
        return abs(self.difference) / self.scale if self.scale > 0 else abs(self.difference)

    def to_dict(self) -> dict:
        return {
            "pencil": self.pencil,
            "multiplier": self.multiplier,
            "difference": self.difference,
            "scale": self.scale,
        }


def quad_form_bn(e_phi: Expr, n: int, t: float, f: SampledFunction) -> QuadFormResult:
    """
    <B_n(S_t) f, f> computed (a) by composing S_t and S_t* along the binomial
    pencil and (b) through the multiplication symbol.

    The routes agree when f vanishes on the last n*t of the window.
    """
    grid = f.grid
    k_steps = grid.shift_index(t)
    tail = n * k_steps
    if tail and np.any(f.values[max(grid.n_points - tail, 0):] != 0):
        logger.warning(
            f"f is non-zero within {n}*t of x_max; the pencil route truncates there"
        )

    pencil = 0.0
    scale = 0.0
    for k in range(n + 1):
        forward = power(apply_st, e_phi, t, f, k)
        back = power(apply_adjoint, e_phi, t, forward, k)
        term = np.real(inner(back, f))
        pencil += (-1) ** k * comb(n, k) * term
        scale += comb(n, k) * abs(term)

    m = multiplier_bn(e_phi, n, t, grid)
    multiplier = float(np.real(inner(f.with_values(m.values * f.values), f)))
    logger.debug(f"quad_form n={n} t={t}: pencil={pencil:.6g} multiplier={multiplier:.6g}")
    return QuadFormResult(
        pencil=float(pencil),
        multiplier=multiplier,
        difference=float(pencil - multiplier),
        scale=float(scale),
    )


def norm_st(e_phi: Expr, t: float, g: Grid) -> float:
    """||S_t|| approximated by the maximum of phi_t over the grid."""
    return float(np.max(weight(e_phi, t, g).values))


def semigroup_residual(e_phi: Expr, t: float, s: float, f: SampledFunction) -> float:
    """max |S_t S_s f - S_{t+s} f| over the grid."""
    composed = apply_st(e_phi, t, apply_st(e_phi, s, f))
    direct = apply_st(e_phi, t + s, f)
    return float(np.max(np.abs(composed.values - direct.values)))
