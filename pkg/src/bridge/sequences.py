"""
Weighted-shift bridge: beta_n = phi(n), alpha_n = sqrt(beta_{n+1}/beta_n).

Sequences are plain numpy arrays; forward differences are np.diff.
"""

from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np
import pandas as pd

from ..operators import positive_values
from ..symbols import Expr

# Default number of shift steps
DEFAULT_TERMS = 32


class SequenceLengthError(ValueError):
    """A sequence is too short for the requested difference order."""


@dataclass(frozen=True, eq=False)
class ShiftWeights:
    """
    Sequences extracted from a symbol.

    Attributes:
        beta: phi(0), ..., phi(N) (raw, not normalised)
        alpha: sqrt(beta[n+1]/beta[n]) for n = 0..N-1
        dual_alpha: 1/alpha, the weights of the Cauchy dual shift
        normalized_beta: beta / beta[0]
    """
    beta: np.ndarray
    alpha: np.ndarray
    dual_alpha: np.ndarray
    normalized_beta: np.ndarray

    @property
    def terms(self) -> int:
        return int(self.alpha.size)

    def to_dict(self) -> dict:
        return {
            "beta": self.beta.tolist(),
            "alpha": self.alpha.tolist(),
            "dual_alpha": self.dual_alpha.tolist(),
            "normalized_beta": self.normalized_beta.tolist(),
        }


def beta_alpha(e_phi: Expr, N: int = DEFAULT_TERMS) -> ShiftWeights:
    """
    Sample phi at the integers 0..N and build the shift weights.

    Raises:
        PositivityError: phi(n) <= 0 for some n (index = n)
    """
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    beta = positive_values(e_phi, np.arange(N + 1, dtype=float))
    alpha = np.sqrt(beta[1:] / beta[:-1])
    return ShiftWeights(
        beta=beta,
        alpha=alpha,
        dual_alpha=1.0 / alpha,
        normalized_beta=beta / beta[0],
    )


def shift_weights_to_frame(weights: ShiftWeights) -> pd.DataFrame:
    """Table `n,beta,alpha,dual_alpha`; alpha columns are empty in the last row."""
    pad = np.full(1, np.nan)
    return pd.DataFrame({
        "n": np.arange(weights.beta.size),
        "beta": weights.beta,
        "alpha": np.concatenate([weights.alpha, pad]),
        "dual_alpha": np.concatenate([weights.dual_alpha, pad]),
    })


def fwd_diff(seq: Sequence[float], k: int) -> np.ndarray:
    """
    k-fold forward difference (Delta u)(n) = u(n+1) - u(n).

    Raises:
        SequenceLengthError: k >= len(seq)
    """
    seq = np.asarray(seq, dtype=float)
    if k < 0:
        raise ValueError(f"Difference order must be non-negative, got {k}")
    if k >= seq.size:
        raise SequenceLengthError(f"Order {k} needs more than {seq.size} terms")
    return np.diff(seq, n=k) if k else seq.copy()


def leibniz_check(phi_seq: Sequence[float], psi_seq: Sequence[float], n: int,
                  relative: bool = False) -> float:
    """
    Max residual of the discrete Leibniz rule

        Delta^n (phi psi)(x) = sum_k C(n, k) (Delta^k phi)(x) (Delta^(n-k) psi)(x + k)

    over every admissible x. With relative=True the residual is divided by
    the largest sum of absolute terms.
    """
    phi = np.asarray(phi_seq, dtype=float)
    psi = np.asarray(psi_seq, dtype=float)
    if phi.size != psi.size:
        raise SequenceLengthError(f"Length mismatch: {phi.size} vs {psi.size}")
    count = phi.size - n
    lhs = fwd_diff(phi * psi, n)
    rhs = np.zeros(count)
    scale = np.zeros(count)
    for k in range(n + 1):
        term = comb(n, k) * fwd_diff(phi, k)[:count] * fwd_diff(psi, n - k)[k:k + count]
        rhs += term
        scale += np.abs(term)
    residual = float(np.max(np.abs(lhs - rhs)))
    if relative:
        top = float(np.max(scale))
        return residual / top if top > 0 else residual
    return residual
