"""
Data models for classification results.

Verdicts are three-valued: Holds, Fails (with a witness) or Inconclusive
(the only evidence against the property lies inside the tolerance band).
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple


class VerdictStatus(str, Enum):
    """Outcome of a numerical property check."""
    HOLDS = "Holds"
    FAILS = "Fails"
    INCONCLUSIVE = "Inconclusive"


class SignVerdict(str, Enum):
    """Sign of one derivative order (or difference order) over a grid."""
    NON_NEGATIVE = "NonNegative"
    NON_POSITIVE = "NonPositive"
    ZERO = "Zero"
    MIXED = "Mixed"


@dataclass(frozen=True)
class Witness:
    """
    A sample that decides a verdict.

    `x` is a grid point (an integer index for sequences); `order` is the
    derivative or difference order and `t` the step, when they apply.
    """
    x: float
    value: float
    order: Optional[int] = None
    t: Optional[float] = None

    def to_dict(self) -> dict:
        data = {"x": self.x, "value": self.value}
        if self.order is not None:
            data["order"] = self.order
        if self.t is not None:
            data["t"] = self.t
        return data


@dataclass(frozen=True)
class Verdict:
    """Three-valued verdict with optional witness and note."""
    status: VerdictStatus
    witness: Optional[Witness] = None
    note: Optional[str] = None

    @classmethod
    def holds(cls, note: Optional[str] = None) -> "Verdict":
        return cls(VerdictStatus.HOLDS, None, note)

    @classmethod
    def fails(cls, witness: Optional[Witness] = None, note: Optional[str] = None) -> "Verdict":
        return cls(VerdictStatus.FAILS, witness, note)

    @classmethod
    def inconclusive(cls, note: Optional[str] = None, witness: Optional[Witness] = None) -> "Verdict":
        return cls(VerdictStatus.INCONCLUSIVE, witness, note)

    @property
    def is_holds(self) -> bool:
        return self.status is VerdictStatus.HOLDS

    @property
    def is_fails(self) -> bool:
        return self.status is VerdictStatus.FAILS

    @property
    def is_inconclusive(self) -> bool:
        return self.status is VerdictStatus.INCONCLUSIVE

    def to_dict(self) -> dict:
        data = {"status": self.status.value}
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        if self.note:
            data["note"] = self.note
        return data


def combine_all(*verdicts: Verdict) -> Verdict:
    """Conjunction: first Fails wins, then any Inconclusive, else Holds."""
    for verdict in verdicts:
        if verdict.is_fails:
            return verdict
    for verdict in verdicts:
        if verdict.is_inconclusive:
            return verdict
    return Verdict.holds()


@dataclass(frozen=True)
class OrderSign:
    """
    Sign data for a single order.

    Attributes:
        order: Derivative (or difference) order
        verdict: NonNegative / NonPositive / Zero / Mixed
        epsilon: Zero band half-width used for this order
        min_value: Smallest sampled value
        max_value: Largest sampled value
        negative_witness: First sample below -epsilon, if any
        positive_witness: First sample above +epsilon, if any
        noise: Rounding floor; wrong-sign values no larger than this count as zero
    """
    order: int
    verdict: SignVerdict
    epsilon: float
    min_value: float
    max_value: float
    negative_witness: Optional[Witness] = None
    positive_witness: Optional[Witness] = None
    noise: float = 0.0

    def to_dict(self) -> dict:
        data = {
            "order": self.order,
            "verdict": self.verdict.value,
            "epsilon": self.epsilon,
            "min": self.min_value,
            "max": self.max_value,
        }
        if self.negative_witness is not None:
            data["negative_witness"] = self.negative_witness.to_dict()
        if self.positive_witness is not None:
            data["positive_witness"] = self.positive_witness.to_dict()
        return data


@dataclass(frozen=True)
class SignProfile:
    """Per-order sign verdicts of a symbol's derivatives over a sample grid."""
    orders_checked: int
    grid: Tuple[float, ...]
    orders: Tuple[OrderSign, ...]

    def __getitem__(self, k: int) -> OrderSign:
        return self.orders[k]

    @property
    def verdicts(self) -> List[SignVerdict]:
        return [o.verdict for o in self.orders]

    def to_dict(self) -> dict:
        return {
            "orders_checked": self.orders_checked,
            "grid_size": len(self.grid),
            "orders": [o.to_dict() for o in self.orders],
        }


@dataclass(frozen=True)
class Finding:
    """A Holds premise whose known consequence did not hold."""
    premise: str
    consequence: str
    status: VerdictStatus

    @property
    def message(self) -> str:
        return f"{self.premise} Holds but {self.consequence} is {self.status.value}"

    def to_dict(self) -> dict:
        return {
            "premise": self.premise,
            "consequence": self.consequence,
            "status": self.status.value,
        }


# Report field order
FUNCTION_CLASSES = (
    "completely_monotone",
    "completely_alternating",
    "absolutely_monotone",
    "concave",
    "log_convex",
    "contractive",
    "expansive",
)

SEMIGROUP_CLASSES = (
    "subnormal_contraction",
    "completely_hyperexpansive",
    "two_hyperexpansive",
    "m_isometry",
    "alternatingly_hyperexpansive",
    "hyponormal",
    "contraction",
    "expansion",
)


@dataclass(frozen=True)
class MIsometryVerdict:
    """m-isometry verdict; `m` is set when the symbol is a polynomial of degree m-1."""
    verdict: Verdict
    m: Optional[int] = None

    def to_dict(self) -> dict:
        data = self.verdict.to_dict()
        data["m"] = self.m
        return data


@dataclass(frozen=True)
class ClassificationReport:
    """
    Function-class and semigroup-class verdicts for one symbol.

    `semigroup_classes` is derived from `function_classes` only, through
    `semigroup_map`. `m_isometry` and `hyperexpansive_order` are kept
    beside the dict because they carry an integer.
    """
    symbol: str
    positivity: Verdict
    function_classes: Dict[str, Verdict]
    polynomial_degree: Optional[int]
    semigroup_classes: Dict[str, Verdict]
    m_isometry: MIsometryVerdict
    hyperexpansive_order: int
    checked_order: int
    grid_description: str
    t_values: Tuple[float, ...]
    findings: Tuple[Finding, ...] = ()
    non_smooth: bool = False
    profile: Optional[SignProfile] = field(default=None, compare=False)

    def function_class(self, name: str) -> Verdict:
        return self.function_classes[name]

    def semigroup_class(self, name: str) -> Verdict:
        if name == "m_isometry":
            return self.m_isometry.verdict
        return self.semigroup_classes[name]

    def lookup(self, name: str) -> Verdict:
        """Find a verdict by class name in either family (used by --assert)."""
        if name == "positivity":
            return self.positivity
        if name in self.function_classes:
            return self.function_classes[name]
        if name == "m_isometry" or name in self.semigroup_classes:
            return self.semigroup_class(name)
        raise KeyError(name)

    def to_dict(self) -> dict:
        semigroup = {}
        for name in SEMIGROUP_CLASSES:
            if name == "m_isometry":
                semigroup[name] = self.m_isometry.to_dict()
            elif name in self.semigroup_classes:
                semigroup[name] = self.semigroup_classes[name].to_dict()
        return {
            "symbol": self.symbol,
            "positivity": self.positivity.to_dict(),
            "function_classes": {
                name: self.function_classes[name].to_dict()
                for name in FUNCTION_CLASSES if name in self.function_classes
            },
            "polynomial_degree": self.polynomial_degree,
            "semigroup_classes": semigroup,
            "hyperexpansive_order": self.hyperexpansive_order,
            "checked_order": self.checked_order,
            "grid": self.grid_description,
            "t_values": list(self.t_values),
            "non_smooth": self.non_smooth,
            "findings": [f.to_dict() for f in self.findings],
        }
