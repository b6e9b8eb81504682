"""
Lawson-Hanson active-set non-negative least squares.

    minimize ||A x - b||_2  subject to  x >= 0

The passive set P holds the indices allowed to be positive. Each outer
step moves the index with the largest dual value w = A^T (b - A x) into P
(smallest index on ties); the inner loop steps back towards feasibility
whenever the unconstrained solution on P has non-positive entries.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..utils.logging_config import get_logger
from .errors import NNLSConvergenceError

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class NNLSResult:
    x: np.ndarray
    residual_norm: float
    iterations: int


def _solve_passive(A: np.ndarray, b: np.ndarray, passive: np.ndarray) -> np.ndarray:
    z = np.zeros(A.shape[1])
    if np.any(passive):
        z[passive] = np.linalg.lstsq(A[:, passive], b, rcond=None)[0]
    return z


def nnls(A, b, max_iter: Optional[int] = None) -> NNLSResult:
    """
    Solve min ||A x - b|| with x >= 0.

    Args:
        A: Matrix of shape (m, n)
        b: Right-hand side of shape (m,)
        max_iter: Iteration cap (default 10 * n), counting every least-squares solve

    Returns:
        NNLSResult with solution, residual norm and iteration count

    Raises:
        NNLSConvergenceError: cap reached before the KKT conditions held
    """
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    if A.ndim != 2 or b.shape != (A.shape[0],):
        raise ValueError(f"Shape mismatch: A {A.shape}, b {b.shape}")
    m, n = A.shape
    if max_iter is None:
        max_iter = 10 * n

    eps = np.finfo(float).eps
    tol = 10 * eps * max(m, n) * max(1.0, np.max(np.abs(A), initial=0.0)) \
        * max(1.0, np.max(np.abs(b), initial=0.0))

    x = np.zeros(n)
    passive = np.zeros(n, dtype=bool)
    rejected = np.zeros(n, dtype=bool)
    iterations = 0

    while True:
        w = A.T @ (b - A @ x)
        candidates = ~passive & ~rejected & (w > tol)
        if not np.any(candidates):
            break
        if iterations >= max_iter:
            raise NNLSConvergenceError(iterations)

        j = int(np.argmax(np.where(candidates, w, -np.inf)))
        passive[j] = True
        z = _solve_passive(A, b, passive)
        iterations += 1

        if z[j] <= 0:
            # rounding made the entering column useless; skip it until x moves
            passive[j] = False
            rejected[j] = True
            continue

        while np.any(z[passive] <= 0):
            if iterations >= max_iter:
                raise NNLSConvergenceError(iterations)
            blocking = passive & (z <= 0)
            alpha = np.min(x[blocking] / (x[blocking] - z[blocking]))
            x = x + alpha * (z - x)
            passive &= x > tol
            x[~passive] = 0.0
            z = _solve_passive(A, b, passive)
            iterations += 1

        x = z
        rejected[:] = False

    residual = float(np.linalg.norm(A @ x - b))
    logger.debug(f"NNLS: {int(passive.sum())} active of {n}, {iterations} iterations, residual {residual:.3g}")
    return NNLSResult(x=x, residual_norm=residual, iterations=iterations)
