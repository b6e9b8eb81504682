"""
Symbol classification.

Function classes are decided from derivative signs (jets) over the sample
grid; semigroup classes follow from them through `semigroup_map`:

    completely monotone + contractive  ->  subnormal contraction
    completely alternating             ->  completely hyperexpansive
    concave                            ->  2-hyperexpansive
    polynomial of degree m-1           ->  m-isometry
    absolutely monotone                ->  alternatingly hyperexpansive
    log-convex                         ->  hyponormal
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from ..symbols import Call, Expr, to_text
from ..utils.logging_config import get_logger
from .config import ClassifyConfig
from .differences import Direction, as_function, difference_pairs, difference_sign
from .implications import FUNCTION_IMPLICATIONS, SEMIGROUP_IMPLICATIONS, apply_implications
from .models import (
    FUNCTION_CLASSES,
    ClassificationReport,
    MIsometryVerdict,
    SignProfile,
    SignVerdict,
    Verdict,
    VerdictStatus,
    Witness,
    combine_all,
)
from .sign_profile import sign_profile
from .signs import required_sign

logger = get_logger(__name__)

NON_SMOOTH_NOTE = "derivative route skipped for non-smooth symbol"


# ----------------------------------------------------------------------
# Individual checks
# ----------------------------------------------------------------------

def positivity_check(values: np.ndarray, points: np.ndarray) -> Verdict:
    """phi > 0 at every grid point; witness is the first point where it is not."""
    bad = np.flatnonzero(~(values > 0))
    if bad.size:
        i = int(bad[0])
        return Verdict.fails(Witness(x=float(points[i]), value=float(values[i]), order=0))
    return Verdict.holds()


def ratio_check(
    f: Callable[[np.ndarray], np.ndarray],
    points: np.ndarray,
    cfg: ClassifyConfig,
    contractive: bool,
) -> Verdict:
    """
    Contraction (phi(x+t) <= phi(x)) or expansion (phi(x+t) >= phi(x)) over
    the (x, t) pairs with x + t <= x_max.
    """
    pairs = difference_pairs(points, cfg.t_values, 1, cfg.x_max)
    ratios = f(pairs.x + pairs.t) / f(pairs.x)
    excess = ratios - 1.0 if contractive else 1.0 - ratios
    epsilon = cfg.tol * (1.0 + float(np.max(np.abs(ratios))))
    bad = np.flatnonzero(excess > epsilon)
    if bad.size:
        i = int(bad[0])
        return Verdict.fails(Witness(x=float(pairs.x[i]), value=float(ratios[i]), t=float(pairs.t[i])))
    if np.all(excess <= 0):
        return Verdict.holds()
    return Verdict.inconclusive("ratio phi(x+t)/phi(x) within tolerance band of 1")


def _alternating(profile: SignProfile, start: int, shift: int) -> Verdict:
    """Orders start..K with required sign (-1)^(k+shift)."""
    return combine_all(*(
        required_sign(profile[k], (-1) ** (k + shift))
        for k in range(start, profile.orders_checked + 1)
    ))


def polynomial_degree(profile: SignProfile) -> Optional[int]:
    """Smallest m-1 with order m Zero and order m-1 non-Zero, or None."""
    for m in range(1, profile.orders_checked + 1):
        if (profile[m].verdict is SignVerdict.ZERO
                and profile[m - 1].verdict is not SignVerdict.ZERO):
            return m - 1
    return None


def hyperexpansive_order(verdicts: List[Verdict]) -> int:
    """
    Largest m such that the first m checks Hold.

    `verdicts[n-1]` is the check of (-1)^(n-1) phi^(n) >= 0 (equivalently
    D_n <= 0), so the result is the m of m-hyperexpansion up to the checked
    order.
    """
    m = 0
    for verdict in verdicts:
        if not verdict.is_holds:
            break
        m += 1
    return m


def m_isometry_verdict(profile: SignProfile, degree: Optional[int]) -> MIsometryVerdict:
    if degree is not None:
        return MIsometryVerdict(Verdict.holds(), m=degree + 1)
    top = profile[profile.orders_checked]
    witnesses = [w for w in (top.negative_witness, top.positive_witness) if w is not None]
    witness = min(witnesses, key=lambda w: w.x) if witnesses else None
    return MIsometryVerdict(
        Verdict.fails(witness, f"no derivative vanishes up to order {profile.orders_checked}")
    )


def semigroup_map(function_classes: Dict[str, Verdict]) -> Dict[str, Verdict]:
    """Semigroup verdicts as a pure function of the function-class verdicts."""
    fc = function_classes
    return {
        "subnormal_contraction": combine_all(fc["completely_monotone"], fc["contractive"]),
        "completely_hyperexpansive": fc["completely_alternating"],
        "two_hyperexpansive": fc["concave"],
        "alternatingly_hyperexpansive": fc["absolutely_monotone"],
        "hyponormal": fc["log_convex"],
        "contraction": fc["contractive"],
        "expansion": fc["expansive"],
    }


def _finish(
    symbol: str,
    positivity: Verdict,
    function_classes: Dict[str, Verdict],
    degree: Optional[int],
    m_isometry: MIsometryVerdict,
    order_m: int,
    cfg: ClassifyConfig,
    profile: Optional[SignProfile] = None,
    non_smooth: bool = False,
) -> ClassificationReport:
    function_classes, findings = apply_implications(function_classes, FUNCTION_IMPLICATIONS)
    semigroup = semigroup_map(function_classes)
    _, semigroup_findings = apply_implications(semigroup, SEMIGROUP_IMPLICATIONS)
    return ClassificationReport(
        symbol=symbol,
        positivity=positivity,
        function_classes=function_classes,
        polynomial_degree=degree,
        semigroup_classes=semigroup,
        m_isometry=m_isometry,
        hyperexpansive_order=order_m,
        checked_order=cfg.order,
        grid_description=cfg.describe(),
        t_values=cfg.t_values,
        findings=tuple(findings + semigroup_findings),
        non_smooth=non_smooth,
        profile=profile,
    )


def _not_positive_report(symbol: str, positivity: Verdict, cfg: ClassifyConfig,
                         non_smooth: bool = False) -> ClassificationReport:
    note = "symbol is not positive on the grid"
    logger.warning(f"{symbol}: {note}")
    undecided = {name: Verdict.inconclusive(note) for name in FUNCTION_CLASSES}
    return ClassificationReport(
        symbol=symbol,
        positivity=positivity,
        function_classes=undecided,
        polynomial_degree=None,
        semigroup_classes={name: Verdict.inconclusive(note) for name in semigroup_map(undecided)},
        m_isometry=MIsometryVerdict(Verdict.inconclusive(note)),
        hyperexpansive_order=0,
        checked_order=cfg.order,
        grid_description=cfg.describe(),
        t_values=cfg.t_values,
        non_smooth=non_smooth,
    )


# ----------------------------------------------------------------------
# Public entry points
# ----------------------------------------------------------------------

def classify(e: Expr, cfg: Optional[ClassifyConfig] = None) -> ClassificationReport:
    """
    Classify a symbol and the semigroup it generates.

    Args:
        e: Symbol expression
        cfg: Order, grid and tolerance (defaults to ClassifyConfig())

    Returns:
        ClassificationReport. If phi is not positive on the grid, positivity
        Fails and every other verdict is Inconclusive.

    Raises:
        SymbolDomainError: e is not smooth somewhere on the grid
    """
    cfg = cfg or ClassifyConfig()
    symbol = to_text(e)
    points = cfg.points
    f = as_function(e)

    positivity = positivity_check(f(points), points)
    if positivity.is_fails:
        return _not_positive_report(symbol, positivity, cfg)

    profile = sign_profile(e, cfg.order, points, cfg.tol)
    log_profile = sign_profile(Call("log", (e,)), 2, points, cfg.tol)

    function_classes = {
        "completely_monotone": _alternating(profile, 0, 0),
        "completely_alternating": _alternating(profile, 1, 1),
        "absolutely_monotone": combine_all(*(
            required_sign(profile[k], 1) for k in range(cfg.order + 1)
        )),
        "concave": required_sign(profile[2], -1),
        "log_convex": required_sign(log_profile[2], 1),
        "contractive": ratio_check(f, points, cfg, contractive=True),
        "expansive": ratio_check(f, points, cfg, contractive=False),
    }

    degree = polynomial_degree(profile)
    order_m = hyperexpansive_order([
        required_sign(profile[n], (-1) ** (n - 1)) for n in range(1, cfg.order + 1)
    ])
    report = _finish(
        symbol, positivity, function_classes, degree,
        m_isometry_verdict(profile, degree), order_m, cfg, profile=profile,
    )
    logger.info(
        f"Classified {symbol}: "
        + ", ".join(f"{k}={v.status.value}" for k, v in report.semigroup_classes.items())
    )
    return report


def classify_non_smooth(
    f: Callable[[np.ndarray], np.ndarray],
    cfg: Optional[ClassifyConfig] = None,
    label: str = "<callable>",
) -> ClassificationReport:
    """
    Classify a symbol given only as a vectorised callable.

    Positivity, contraction/expansion and concavity (D_2 <= 0) come from the
    difference route; derivative-only classes are Inconclusive and the
    report is flagged non_smooth.
    """
    cfg = cfg or ClassifyConfig()
    points = cfg.points
    func = as_function(f)

    positivity = positivity_check(func(points), points)
    if positivity.is_fails:
        return _not_positive_report(label, positivity, cfg, non_smooth=True)

    def check(n: int, direction: Direction) -> Verdict:
        pairs = difference_pairs(points, cfg.t_values, n, cfg.x_max)
        return required_sign(difference_sign(func, n, pairs, cfg.tol), direction.sign)

    skipped = Verdict.inconclusive(NON_SMOOTH_NOTE)
    function_classes = {
        "completely_monotone": skipped,
        "completely_alternating": skipped,
        "absolutely_monotone": skipped,
        "concave": check(2, Direction.NON_POSITIVE),
        "log_convex": skipped,
        "contractive": ratio_check(func, points, cfg, contractive=True),
        "expansive": ratio_check(func, points, cfg, contractive=False),
    }
    order_m = hyperexpansive_order([
        check(n, Direction.NON_POSITIVE) for n in range(1, cfg.order + 1)
        if n * min(cfg.t_values) <= cfg.x_max
    ])
    report = _finish(
        label, positivity, function_classes, None,
        MIsometryVerdict(skipped), order_m, cfg, non_smooth=True,
    )
    logger.info(f"Classified non-smooth {label}: two_hyperexpansive="
                f"{report.semigroup_classes['two_hyperexpansive'].status.value}")
    return report


# ----------------------------------------------------------------------
# Derivative route vs difference route
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CrossCheckRow:
    """Both routes for one n, in both directions (>= 0 and <= 0)."""
    n: int
    derivative: Tuple[Verdict, Verdict]
    difference: Tuple[Verdict, Verdict]

    @property
    def conflicts(self) -> List[Tuple[str, Verdict, Verdict]]:
        found = []
        for direction, d, f in zip(Direction, self.derivative, self.difference):
            if VerdictStatus.INCONCLUSIVE in (d.status, f.status):
                continue
            if d.status is not f.status:
                found.append((direction.value, d, f))
        return found

    @property
    def agree(self) -> bool:
        return not self.conflicts

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "agree": self.agree,
            "derivative": {d.value: v.to_dict() for d, v in zip(Direction, self.derivative)},
            "difference": {d.value: v.to_dict() for d, v in zip(Direction, self.difference)},
        }


@dataclass(frozen=True)
class CrossCheckReport:
    symbol: str
    rows: Tuple[CrossCheckRow, ...]

    @property
    def agree(self) -> bool:
        return all(row.agree for row in self.rows)

    @property
    def conflicts(self) -> List[Tuple[int, str, Verdict, Verdict]]:
        return [(row.n,) + c for row in self.rows for c in row.conflicts]

    def to_dict(self) -> dict:
        return {
            "symbol": self.symbol,
            "agree": self.agree,
            "rows": [row.to_dict() for row in self.rows],
        }


def cross_check(e: Expr, n_max: int, cfg: Optional[ClassifyConfig] = None) -> CrossCheckReport:
    """
    Compare the sign of (-1)^n phi^(n) with the sign of D_n for n = 0..n_max.

    The two agree when their statuses match per direction or either side is
    Inconclusive; a conflict is a returned finding, not an error.
    """
    cfg = cfg or ClassifyConfig()
    points = cfg.points
    profile = sign_profile(e, max(n_max, 1), points, cfg.tol)
    rows = []
    for n in range(n_max + 1):
        parity = (-1) ** n
        derivative = tuple(required_sign(profile[n], parity * d.sign) for d in Direction)
        pairs = difference_pairs(points, cfg.t_values, n, cfg.x_max)
        d_sign = difference_sign(e, n, pairs, cfg.tol)
        difference = tuple(required_sign(d_sign, d.sign) for d in Direction)
        row = CrossCheckRow(n, derivative, difference)
        if not row.agree:
            logger.warning(f"Routes disagree for {to_text(e)} at n={n}: {row.conflicts}")
        rows.append(row)
    return CrossCheckReport(to_text(e), tuple(rows))
