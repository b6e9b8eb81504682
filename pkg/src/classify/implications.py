"""
Known implications between classes, kept as networkx directed graphs.

An edge premise -> consequence means "premise Holds implies consequence
Holds". When a premise Holds:
- an Inconclusive consequence is upgraded to Holds (noting the premise);
- a Fails consequence is reported as a Finding, never silently changed.
"""

from typing import Dict, List, Tuple

import networkx as nx

from ..utils.logging_config import get_logger
from .models import Finding, Verdict

logger = get_logger(__name__)


def _graph(edges) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_edges_from(edges)
    return graph


FUNCTION_IMPLICATIONS = _graph([
    ("completely_monotone", "log_convex"),
    ("completely_monotone", "contractive"),
    ("completely_alternating", "concave"),
    ("completely_alternating", "expansive"),
    # positive and concave on [0, inf) forces non-decreasing
    ("concave", "expansive"),
])

SEMIGROUP_IMPLICATIONS = _graph([
    ("subnormal_contraction", "hyponormal"),
    ("subnormal_contraction", "contraction"),
    ("completely_hyperexpansive", "two_hyperexpansive"),
    ("two_hyperexpansive", "expansion"),
])


def apply_implications(
    verdicts: Dict[str, Verdict],
    graph: nx.DiGraph,
) -> Tuple[Dict[str, Verdict], List[Finding]]:
    """
    Propagate Holds verdicts along the graph.

    Consequences are visited transitively in topological order, so an
    upgraded consequence can itself upgrade its own consequences.

    Returns:
        (updated verdicts, findings)
    """
    updated = dict(verdicts)
    findings: List[Finding] = []
    for premise in nx.topological_sort(graph):
        if premise not in updated or not updated[premise].is_holds:
            continue
        for consequence in graph.successors(premise):
            if consequence not in updated:
                continue
            verdict = updated[consequence]
            if verdict.is_inconclusive:
                updated[consequence] = Verdict.holds(f"implied by {premise}")
                logger.debug(f"Upgraded {consequence} to Holds via {premise}")
            elif verdict.is_fails:
                findings.append(Finding(premise, consequence, verdict.status))
                logger.warning(f"Inconsistent verdicts: {premise} Holds but {consequence} Fails")
    return updated, findings


def implied_by(name: str, graph: nx.DiGraph) -> List[str]:
    """All classes that imply `name` (directly or transitively)."""
    if name not in graph:
        return []
    return sorted(nx.ancestors(graph, name))
