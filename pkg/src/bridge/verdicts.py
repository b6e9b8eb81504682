"""
Complete monotonicity / alternation of sequences via forward differences.

    completely monotone:    (-1)^k Delta^k u >= 0, k >= 0
    completely alternating: (-1)^k Delta^k u <= 0, k >= 1
"""

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from ..classify import OrderSign, Verdict, combine_all, order_sign, required_sign
from ..symbols import Expr, to_text
from ..utils.logging_config import get_logger
from .sequences import (
    DEFAULT_TERMS,
    SequenceLengthError,
    ShiftWeights,
    beta_alpha,
    fwd_diff,
    leibniz_check,
)

logger = get_logger(__name__)

DEFAULT_SEQUENCE_ORDER = 8
DEFAULT_SEQUENCE_TOL = 1e-9
LEIBNIZ_MAX_ORDER = 5


@dataclass(frozen=True)
class SequenceVerdicts:
    """Sequence CM/CA verdicts; witnesses carry the integer index n as x."""
    completely_monotone: Verdict
    completely_alternating: Verdict
    checked_order: int
    orders: Tuple[OrderSign, ...] = ()

    def to_dict(self) -> dict:
        return {
            "completely_monotone": self.completely_monotone.to_dict(),
            "completely_alternating": self.completely_alternating.to_dict(),
            "checked_order": self.checked_order,
        }


def seq_classify(seq: Sequence[float], K: int = DEFAULT_SEQUENCE_ORDER,
                 tol: float = DEFAULT_SEQUENCE_TOL) -> SequenceVerdicts:
    """
    Three-valued sequence CM/CA verdicts up to difference order K.

    Raises:
        SequenceLengthError: the sequence has K or fewer terms
    """
    seq = np.asarray(seq, dtype=float)
    if seq.size <= K:
        raise SequenceLengthError(f"Order {K} needs more than {seq.size} terms")
    orders = []
    for k in range(K + 1):
        diff = fwd_diff(seq, k)
        orders.append(order_sign(diff, np.arange(diff.size), k, tol))
    cm = combine_all(*(required_sign(orders[k], (-1) ** k) for k in range(K + 1)))
    ca = combine_all(*(required_sign(orders[k], -((-1) ** k)) for k in range(1, K + 1)))
    return SequenceVerdicts(cm, ca, K, tuple(orders))


@dataclass(frozen=True)
class BridgeReport:
    """Shift weights of a symbol with verdicts for beta and for 1/beta."""
    symbol: str
    weights: ShiftWeights
    beta_verdicts: SequenceVerdicts
    dual_verdicts: SequenceVerdicts
    leibniz_residuals: Dict[int, float]

    def to_dict(self) -> dict:
        return {
            "symbol": self.symbol,
            "terms": self.weights.terms,
            "weights": self.weights.to_dict(),
            "beta": self.beta_verdicts.to_dict(),
            "reciprocal_beta": self.dual_verdicts.to_dict(),
            "leibniz_residuals": [
                {"n": n, "relative_residual": r} for n, r in self.leibniz_residuals.items()
            ],
        }


def analyze_bridge(e_phi: Expr, N: int = DEFAULT_TERMS, K: Optional[int] = None,
                   tol: float = DEFAULT_SEQUENCE_TOL) -> BridgeReport:
    """beta_alpha plus sequence classification of beta and 1/beta."""
    weights = beta_alpha(e_phi, N)
    K = DEFAULT_SEQUENCE_ORDER if K is None else K
    K = min(K, weights.beta.size - 1)
    reciprocal = 1.0 / weights.beta
    residuals = {
        n: leibniz_check(weights.beta, reciprocal, n, relative=True)
        for n in range(min(LEIBNIZ_MAX_ORDER, weights.beta.size - 1) + 1)
    }
    report = BridgeReport(
        symbol=to_text(e_phi),
        weights=weights,
        beta_verdicts=seq_classify(weights.beta, K, tol),
        dual_verdicts=seq_classify(reciprocal, K, tol),
        leibniz_residuals=residuals,
    )
    logger.info(
        f"Bridge for {report.symbol}: beta CM={report.beta_verdicts.completely_monotone.status.value}"
        f" CA={report.beta_verdicts.completely_alternating.status.value}"
    )
    return report
