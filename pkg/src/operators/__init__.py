"""
Discretised weighted translation semigroup on L2[0, x_max].
"""

from .errors import GridMismatchError, ShiftAlignmentError, ZeroWeightError
from .grid import Grid, SampledFunction, inner, same_grid, trapezoid_weights
from .semigroup import (
    QuadFormResult,
    apply_adjoint,
    apply_st,
    multiplier_bn,
    norm_st,
    positive_values,
    power,
    quad_form_bn,
    sample,
    semigroup_residual,
    weight,
)

__all__ = [
    'GridMismatchError',
    'ShiftAlignmentError',
    'ZeroWeightError',
    'Grid',
    'SampledFunction',
    'inner',
    'same_grid',
    'trapezoid_weights',
    'QuadFormResult',
    'apply_adjoint',
    'apply_st',
    'multiplier_bn',
    'norm_st',
    'positive_values',
    'power',
    'quad_form_bn',
    'sample',
    'semigroup_residual',
    'weight',
]
