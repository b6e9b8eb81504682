"""
Finite measures and the representations built from them.

    laplace:  phi(x) = sum_j w_j exp(-a_j x)
    moment:   phi(x) = sum_j w_j s_j^x            (0^0 = 1)
    Levy:     phi(x) = phi0 + c x + sum_j w_j (1 - exp(-a_j x))
"""

from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np
import pandas as pd

from ..operators import Grid, SampledFunction
from ..symbols import BinOp, Call, Expr, Neg, Num, Var
from ..utils.logging_config import get_logger

logger = get_logger(__name__)


class MeasureKind(str, Enum):
    LAPLACE = "laplace"
    MOMENT = "moment"


@dataclass(frozen=True, eq=False)
class DiscreteMeasure:
    """
    Non-negative atoms (location, weight), locations ascending and distinct.
    """
    locations: np.ndarray
    weights: np.ndarray
    kind: MeasureKind = MeasureKind.LAPLACE

    def __post_init__(self):
        locations = np.array(self.locations, dtype=float).reshape(-1)
        weights = np.array(self.weights, dtype=float).reshape(-1)
        if locations.shape != weights.shape:
            raise ValueError(f"{locations.size} locations but {weights.size} weights")
        if np.any(locations < 0) or np.any(weights < 0):
            raise ValueError("Atom locations and weights must be non-negative")
        if np.any(np.diff(locations) <= 0):
            raise ValueError("Atom locations must be strictly increasing")
        object.__setattr__(self, "locations", locations)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "kind", MeasureKind(self.kind))

    @property
    def atoms(self):
        return list(zip(self.locations.tolist(), self.weights.tolist()))

    @property
    def total_mass(self) -> float:
        return float(np.sum(self.weights))

    def basis(self, x: np.ndarray) -> np.ndarray:
        """Matrix of basis functions, one column per atom."""
        x = np.asarray(x, dtype=float)
        if self.kind is MeasureKind.LAPLACE:
            return np.exp(-np.outer(x, self.locations))
        return np.power(self.locations[None, :], x[:, None])

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return self.basis(x.reshape(-1)) @ self.weights if self.weights.size else np.zeros(x.size)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"a": self.locations, "weight": self.weights})

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "atoms": [{"a": a, "weight": w} for a, w in self.atoms],
        }


@dataclass(frozen=True, eq=False)
class LevyTriple:
    """phi(x) = phi0 + c x + integral of (1 - exp(-a x)) against the measure."""
    phi0: float
    c: float
    measure: DiscreteMeasure

    def __post_init__(self):
        if self.c < 0:
            raise ValueError(f"Drift must be non-negative, got {self.c}")
        if self.measure.kind is not MeasureKind.LAPLACE:
            raise ValueError("Levy measure must be of laplace kind")

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float).reshape(-1)
        jumps = (1.0 - self.measure.basis(x)) @ self.measure.weights if self.measure.weights.size else 0.0
        return self.phi0 + self.c * x + jumps

    def to_dict(self) -> dict:
        return {"phi0": self.phi0, "c": self.c, "atoms": self.measure.to_dict()["atoms"]}


Representation = Union[DiscreteMeasure, LevyTriple]


def synthesize(rep: Representation, g: Grid) -> SampledFunction:
    """Evaluate a representation at the grid nodes."""
    return SampledFunction(g, rep(g.nodes))


def _sum(terms) -> Expr:
    terms = list(terms)
    if not terms:
        return Num(0)
    total = terms[0]
    for term in terms[1:]:
        total = BinOp("+", total, term)
    return total


def _decay(a: float) -> Expr:
    return Call("exp", (Neg(BinOp("*", Num(a), Var())),))


def representation_expr(rep: Representation) -> Expr:
    """
    Expression for a representation, so that it can be classified.

    Moment atoms at s = 0 only contribute at x = 0 and are left out.
    """
    if isinstance(rep, LevyTriple):
        jumps = [
            BinOp("*", Num(w), BinOp("-", Num(1), _decay(a)))
            for a, w in rep.measure.atoms
        ]
        return _sum([Num(rep.phi0), BinOp("*", Num(rep.c), Var())] + jumps)
    if rep.kind is MeasureKind.LAPLACE:
        return _sum(BinOp("*", Num(w), _decay(a)) for a, w in rep.atoms)
    dropped = [w for s, w in rep.atoms if s == 0]
    if dropped:
        logger.debug(f"Dropping atom at s=0 (weight {dropped[0]:.3g}) from expression")
    return _sum(BinOp("*", Num(w), BinOp("^", Num(s), Var())) for s, w in rep.atoms if s > 0)
