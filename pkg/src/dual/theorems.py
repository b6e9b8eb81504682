"""
Implications between the class of a symbol and the class of its dual 1/phi.

Each edge of DUAL_IMPLICATIONS is one check. Guaranteed edges are
theorems; the probe edge (concave -> dual completely monotone) is not, and
is expected to fail for some concave symbols.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

import networkx as nx

from ..classify import ClassificationReport, ClassifyConfig, SignVerdict, Verdict, Witness, classify
from ..symbols import Expr
from ..utils.logging_config import get_logger
from .cauchy import dual_symbol

logger = get_logger(__name__)

DUAL_PREFIX = "dual:"


class CheckStatus(str, Enum):
    PASS = "Pass"
    FAIL = "Fail"
    NOT_APPLICABLE = "NotApplicable"


def _dual_graph() -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_edge("completely_alternating", DUAL_PREFIX + "completely_monotone",
                   name="ca_implies_dual_cm", guaranteed=True)
    graph.add_edge("concave", DUAL_PREFIX + "log_convex",
                   name="concave_implies_dual_log_convex", guaranteed=True)
    graph.add_edge("concave", DUAL_PREFIX + "contractive",
                   name="concave_implies_dual_contraction", guaranteed=True)
    graph.add_edge("two_isometry", DUAL_PREFIX + "completely_monotone",
                   name="two_isometry_implies_dual_cm", guaranteed=True)
    graph.add_edge("concave", DUAL_PREFIX + "completely_monotone",
                   name="concave_dual_cm_probe", guaranteed=False)
    return graph


DUAL_IMPLICATIONS = _dual_graph()


@dataclass(frozen=True)
class TheoremCheck:
    """
    Outcome of one premise -> dual conclusion check.

    `evidence` holds the opposite-sign witnesses of the dual derivative
    order that broke the conclusion, when there is one.
    """
    name: str
    premise: str
    conclusion: str
    status: CheckStatus
    guaranteed: bool
    witness: Optional[Witness] = None
    evidence: Tuple[Witness, ...] = field(default=())
    note: Optional[str] = None

    def to_dict(self) -> dict:
        data = {
            "name": self.name,
            "premise": self.premise,
            "conclusion": self.conclusion,
            "status": self.status.value,
            "guaranteed": self.guaranteed,
        }
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        if self.evidence:
            data["evidence"] = [w.to_dict() for w in self.evidence]
        if self.note:
            data["note"] = self.note
        return data


def premise_verdict(report: ClassificationReport, premise: str) -> Verdict:
    if premise == "two_isometry":
        m = report.m_isometry.m
        if m is not None and m <= 2:
            return Verdict.holds()
        return Verdict.fails(note="not a polynomial of degree at most 1")
    return report.function_class(premise)


def _evidence(dual_report: ClassificationReport, verdict: Verdict) -> Tuple[Witness, ...]:
    if verdict.witness is None or verdict.witness.order is None or dual_report.profile is None:
        return ()
    order = dual_report.profile[verdict.witness.order]
    if order.verdict is not SignVerdict.MIXED:
        return ()
    return (order.negative_witness, order.positive_witness)


def _check(name: str, premise: str, conclusion: str, guaranteed: bool,
           report: ClassificationReport, dual_report: ClassificationReport) -> TheoremCheck:
    target = conclusion[len(DUAL_PREFIX):]
    if not premise_verdict(report, premise).is_holds:
        return TheoremCheck(name, premise, target, CheckStatus.NOT_APPLICABLE, guaranteed,
                            note=f"{premise} does not hold")
    verdict = dual_report.function_class(target)
    if verdict.is_holds:
        return TheoremCheck(name, premise, target, CheckStatus.PASS, guaranteed)
    if verdict.is_fails:
        if guaranteed:
            logger.warning(f"{name} failed for {report.symbol}: dual {target} Fails")
        return TheoremCheck(name, premise, target, CheckStatus.FAIL, guaranteed,
                            witness=verdict.witness, evidence=_evidence(dual_report, verdict),
                            note=verdict.note)
    return TheoremCheck(name, premise, target, CheckStatus.NOT_APPLICABLE, guaranteed,
                        note=f"dual {target} inconclusive at tested tolerance")


def theorem_checks(report: ClassificationReport,
                   dual_report: Optional[ClassificationReport]) -> Tuple[TheoremCheck, ...]:
    """Evaluate every edge of DUAL_IMPLICATIONS, in graph order."""
    checks = []
    for premise, conclusion, data in DUAL_IMPLICATIONS.edges(data=True):
        if dual_report is None:
            checks.append(TheoremCheck(
                data["name"], premise, conclusion[len(DUAL_PREFIX):],
                CheckStatus.NOT_APPLICABLE, data["guaranteed"],
                note="symbol is not positive on the grid",
            ))
            continue
        checks.append(_check(data["name"], premise, conclusion, data["guaranteed"],
                             report, dual_report))
    return tuple(checks)


def verify_dual_theorems(e_phi: Expr, cfg: Optional[ClassifyConfig] = None) -> Tuple[TheoremCheck, ...]:
    """
    Classify phi and 1/phi with the same configuration and check the
    implications between them. Failures are returned, not raised.
    """
    cfg = cfg or ClassifyConfig()
    report = classify(e_phi, cfg)
    dual_report = classify(dual_symbol(e_phi), cfg) if report.positivity.is_holds else None
    return theorem_checks(report, dual_report)
