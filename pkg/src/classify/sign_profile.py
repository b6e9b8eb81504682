"""
Derivative sign profiles over a sample grid.
"""

from typing import Sequence

import numpy as np

from ..symbols import Expr, eval_jet
from ..utils.logging_config import get_logger
from .config import DEFAULT_TOL
from .models import SignProfile
from .signs import order_sign

logger = get_logger(__name__)


def sign_profile(e: Expr, order: int, grid: Sequence[float], tol: float = DEFAULT_TOL) -> SignProfile:
    """
    Classify the sign of e^(k) over the grid for k = 0..order.

    All orders come from one jet evaluation, vectorised over the grid.

    Args:
        e: Symbol expression
        order: Highest derivative order
        grid: Sample points, increasing
        tol: Relative tolerance for zero detection

    Returns:
        SignProfile with one OrderSign per order

    Raises:
        SymbolDomainError: e is not smooth somewhere on the grid
    """
    points = np.asarray(grid, dtype=float)
    derivatives = eval_jet(e, points, order).derivatives
    orders = tuple(order_sign(derivatives[k], points, k, tol) for k in range(order + 1))
    logger.debug(
        f"Sign profile of {e}: " + ", ".join(o.verdict.value for o in orders)
    )
    return SignProfile(orders_checked=order, grid=tuple(points.tolist()), orders=orders)
