"""
Integral representations of symbols fitted with non-negative least squares.
"""

from .errors import EmptyAtomGridError, NNLSConvergenceError
from .fits import (
    DEFAULT_ATOM_COUNT,
    DEFAULT_ATOM_MAX,
    DEFAULT_ATOM_MIN,
    REPRESENTABLE_RESIDUAL,
    FitResult,
    estimate_growth_bound,
    fit_ca,
    fit_cm,
    fit_subnormal,
    log_spaced_atoms,
    weight_limit_check,
)
from .measures import DiscreteMeasure, LevyTriple, MeasureKind, Representation, representation_expr, synthesize
from .nnls import NNLSResult, nnls

__all__ = [
    'EmptyAtomGridError',
    'NNLSConvergenceError',
    'DEFAULT_ATOM_COUNT',
    'DEFAULT_ATOM_MAX',
    'DEFAULT_ATOM_MIN',
    'REPRESENTABLE_RESIDUAL',
    'FitResult',
    'estimate_growth_bound',
    'fit_ca',
    'fit_cm',
    'fit_subnormal',
    'log_spaced_atoms',
    'weight_limit_check',
    'DiscreteMeasure',
    'LevyTriple',
    'MeasureKind',
    'Representation',
    'representation_expr',
    'synthesize',
    'NNLSResult',
    'nnls',
]
