"""
Full Cauchy-dual analysis of a symbol.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from ..classify import ClassificationReport, ClassifyConfig, classify
from ..operators import Grid
from ..symbols import Expr, to_text
from ..utils.logging_config import get_logger
from .cauchy import certifies_hyperexpansive, dual_symbol, is_left_invertible, left_inv_margin
from .theorems import CheckStatus, TheoremCheck, theorem_checks

logger = get_logger(__name__)


@dataclass(frozen=True)
class DualReport:
    """Left invertibility, dual symbol, dual classification and theorem checks."""
    symbol: str
    dual_symbol: str
    left_invertibility_margins: Dict[float, float]
    left_invertible: bool
    hyperexpansive_certified: bool
    classification: ClassificationReport
    dual_classification: Optional[ClassificationReport]
    theorem_checks: Tuple[TheoremCheck, ...]

    def check(self, name: str) -> TheoremCheck:
        for check in self.theorem_checks:
            if check.name == name:
                return check
        raise KeyError(name)

    @property
    def guaranteed_failures(self) -> Tuple[TheoremCheck, ...]:
        return tuple(c for c in self.theorem_checks
                     if c.guaranteed and c.status is CheckStatus.FAIL)

    def to_dict(self) -> dict:
        return {
            "symbol": self.symbol,
            "dual_symbol": self.dual_symbol,
            "left_invertibility_margins": [
                {"t": t, "margin": m} for t, m in self.left_invertibility_margins.items()
            ],
            "left_invertible": self.left_invertible,
            "hyperexpansive_certified": self.hyperexpansive_certified,
            "dual_classification": (
                self.dual_classification.to_dict() if self.dual_classification else None
            ),
            "theorem_checks": [c.to_dict() for c in self.theorem_checks],
        }


def analyze_dual(
    e_phi: Expr,
    cfg: Optional[ClassifyConfig] = None,
    t_values: Optional[Sequence[float]] = None,
    grid: Optional[Grid] = None,
) -> DualReport:
    """
    Analyse the Cauchy dual of the semigroup with symbol e_phi.

    Args:
        e_phi: Symbol expression
        cfg: Classification settings, shared by phi and 1/phi
        t_values: Shifts for the margins (defaults to cfg.t_values)
        grid: Grid for the margins (defaults to cfg.n_uniform points on [0, cfg.x_max])
    """
    cfg = cfg or ClassifyConfig()
    t_values = tuple(t_values) if t_values is not None else cfg.t_values
    grid = grid or Grid(cfg.x_max, cfg.n_uniform)
    dual = dual_symbol(e_phi)

    report = classify(e_phi, cfg)
    if report.positivity.is_holds:
        margins = left_inv_margin(e_phi, t_values, grid)
        dual_report = classify(dual, cfg)
    else:
        margins, dual_report = {}, None

    checks = theorem_checks(report, dual_report)
    result = DualReport(
        symbol=to_text(e_phi),
        dual_symbol=to_text(dual),
        left_invertibility_margins=margins,
        left_invertible=bool(margins) and is_left_invertible(margins),
        hyperexpansive_certified=bool(margins) and certifies_hyperexpansive(margins, cfg.tol),
        classification=report,
        dual_classification=dual_report,
        theorem_checks=checks,
    )
    logger.info(
        f"Dual of {result.symbol}: "
        + ", ".join(f"{c.name}={c.status.value}" for c in checks)
    )
    return result
