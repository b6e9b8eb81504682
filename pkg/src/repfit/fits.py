"""
Fitting integral representations of a sampled symbol with NNLS.

Measures are discretised on a finite atom grid, so a fit is a surrogate
with a reported residual, not a proof that a representation exists.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from ..operators import Grid, SampledFunction, positive_values
from ..symbols import Expr
from ..utils.logging_config import get_logger
from .errors import EmptyAtomGridError
from .measures import DiscreteMeasure, LevyTriple, MeasureKind, Representation, synthesize
from .nnls import nnls

logger = get_logger(__name__)

# Relative residual below which a fit counts as a representation
REPRESENTABLE_RESIDUAL = 1e-3

# Default atom grid
DEFAULT_ATOM_MIN = 1e-3
DEFAULT_ATOM_MAX = 1e2
DEFAULT_ATOM_COUNT = 60

# Probability row multiplier relative to the largest data entry (1e6 in the squared objective)
PENALTY_SCALE = 1e3

# Moment grid size when no s-grid is given
DEFAULT_MOMENT_ATOMS = 201


@dataclass(frozen=True, eq=False)
class FitResult:
    """
    Outcome of a representation fit.

    Attributes:
        representation: DiscreteMeasure or LevyTriple
        residual: Relative L2 residual on the sample nodes
        iterations: NNLS iterations used
        normalization: Divisor applied to the samples before fitting (phi(0) for moment fits)
        representable: residual <= REPRESENTABLE_RESIDUAL
    """
    representation: Representation
    residual: float
    iterations: int
    normalization: float = 1.0
    representable: bool = True

    def reconstruct(self, g: Grid) -> SampledFunction:
        """Representation on g, with the normalisation undone."""
        rep = synthesize(self.representation, g)
        return rep.with_values(self.normalization * rep.values)

    def to_dict(self) -> dict:
        return {
            "representation": self.representation.to_dict(),
            "residual": self.residual,
            "iterations": self.iterations,
            "normalization": self.normalization,
            "representable": self.representable,
        }


def log_spaced_atoms(lo: float = DEFAULT_ATOM_MIN, hi: float = DEFAULT_ATOM_MAX,
                     n: int = DEFAULT_ATOM_COUNT, include: Iterable[float] = ()) -> np.ndarray:
    """n geometric atoms on [lo, hi] plus any extra locations, sorted and unique."""
    if not 0 < lo < hi:
        raise ValueError(f"Need 0 < lo < hi, got lo={lo}, hi={hi}")
    if n < 1:
        raise ValueError(f"Need at least one atom, got {n}")
    atoms = np.geomspace(lo, hi, n) if n > 1 else np.array([lo])
    return np.unique(np.concatenate([atoms, np.asarray(list(include), dtype=float)]))


def _atom_grid(atom_grid: Sequence[float]) -> np.ndarray:
    atoms = np.unique(np.asarray(atom_grid, dtype=float).reshape(-1))
    if atoms.size == 0:
        raise EmptyAtomGridError("Atom grid is empty")
    if np.any(atoms < 0) or not np.all(np.isfinite(atoms)):
        raise ValueError("Atom locations must be finite and non-negative")
    return atoms


def _measure(atoms: np.ndarray, weights: np.ndarray, kind: MeasureKind) -> DiscreteMeasure:
    keep = weights > 0
    return DiscreteMeasure(atoms[keep], weights[keep], kind)


def _check_positive(samples: SampledFunction) -> np.ndarray:
    values = np.asarray(samples.values, dtype=float)
    if np.any(values <= 0):
        raise ValueError("Samples must be positive")
    return values


def _verdict(residual: float, label: str) -> bool:
    representable = residual <= REPRESENTABLE_RESIDUAL
    if not representable:
        logger.warning(f"Residual {residual:.3g} exceeds {REPRESENTABLE_RESIDUAL:g}: not {label}-representable")
    return representable


def fit_cm(samples: SampledFunction, atom_grid: Sequence[float]) -> FitResult:
    """
    Laplace-transform fit phi(x) ~ sum_j w_j exp(-a_j x), w >= 0.

    Raises:
        EmptyAtomGridError: no atoms
        NNLSConvergenceError: solver iteration cap reached
    """
    phi = _check_positive(samples)
    atoms = _atom_grid(atom_grid)
    A = np.exp(-np.outer(samples.nodes, atoms))
    solution = nnls(A, phi)
    residual = solution.residual_norm / float(np.linalg.norm(phi))
    return FitResult(
        representation=_measure(atoms, solution.x, MeasureKind.LAPLACE),
        residual=residual,
        iterations=solution.iterations,
        representable=_verdict(residual, "CM"),
    )


def fit_ca(samples: SampledFunction, atom_grid: Sequence[float]) -> FitResult:
    """
    Levy-form fit phi(x) ~ phi(0) + c x + sum_j w_j (1 - exp(-a_j x)), c, w >= 0.

    phi(0) is read from the sample at x = 0; the residual is relative to ||phi||.
    """
    phi = _check_positive(samples)
    atoms = _atom_grid(atom_grid)
    x = samples.nodes
    phi0 = float(phi[0])
    A = np.column_stack([x, 1.0 - np.exp(-np.outer(x, atoms))])
    solution = nnls(A, phi - phi0)
    residual = solution.residual_norm / float(np.linalg.norm(phi))
    triple = LevyTriple(
        phi0=phi0,
        c=float(solution.x[0]),
        measure=_measure(atoms, solution.x[1:], MeasureKind.LAPLACE),
    )
    return FitResult(
        representation=triple,
        residual=residual,
        iterations=solution.iterations,
        representable=_verdict(residual, "CA"),
    )


def fit_subnormal(samples: SampledFunction, a_max: float,
                  s_grid: Optional[Sequence[float]] = None) -> FitResult:
    """
    Moment fit phi(x)/phi(0) ~ sum_j w_j s_j^x with s_j in [0, a_max].

    The samples are divided by phi(0) (reported as `normalization`) and the
    weights are pushed towards total mass 1 by a heavily weighted extra row.
    """
    phi = _check_positive(samples)
    if not a_max > 0:
        raise ValueError(f"a_max must be positive, got {a_max}")
    if s_grid is None:
        s_grid = np.linspace(0.0, a_max, DEFAULT_MOMENT_ATOMS)
    atoms = _atom_grid(s_grid)
    if atoms[-1] > a_max * (1 + 1e-12):
        raise ValueError(f"Atom {atoms[-1]} lies beyond a_max={a_max}")

    normalization = float(phi[0])
    target = phi / normalization
    A = np.power(atoms[None, :], samples.nodes[:, None])
    penalty = PENALTY_SCALE * max(1.0, float(np.max(np.abs(A))))
    A_aug = np.vstack([A, np.full((1, atoms.size), penalty)])
    b_aug = np.concatenate([target, [penalty]])
    solution = nnls(A_aug, b_aug)

    residual = float(np.linalg.norm(A @ solution.x - target) / np.linalg.norm(target))
    if normalization != 1.0:
        logger.info(f"Moment fit normalised samples by phi(0) = {normalization:.6g}")
    return FitResult(
        representation=_measure(atoms, solution.x, MeasureKind.MOMENT),
        residual=residual,
        iterations=solution.iterations,
        normalization=normalization,
        representable=_verdict(residual, "moment"),
    )


def weight_limit_check(e_phi: Expr, t: float, x_probe: float) -> float:
    """|phi_t(x_probe) - 1|; tends to 0 as x_probe grows for CA symbols."""
    if x_probe < t:
        raise ValueError(f"x_probe must be at least t, got x_probe={x_probe}, t={t}")
    values = positive_values(e_phi, np.array([x_probe, x_probe - t]))
    return abs(float(np.sqrt(values[0] / values[1])) - 1.0)


def estimate_growth_bound(e_phi: Expr, g: Grid) -> float:
    """
    max over grid nodes of phi(x+1)/phi(x).

    A rough guide for a_max in fit_subnormal; not used by any verdict.
    """
    x = g.nodes
    return float(np.max(positive_values(e_phi, x + 1.0) / positive_values(e_phi, x)))
