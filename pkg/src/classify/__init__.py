"""
Function-class and semigroup-class verdicts for symbols.
"""

from .classifier import (
    CrossCheckReport,
    CrossCheckRow,
    classify,
    classify_non_smooth,
    cross_check,
    hyperexpansive_order,
    polynomial_degree,
    semigroup_map,
)
from .config import ClassifyConfig, sample_grid
from .differences import (
    Direction,
    XTPairs,
    alternating_sum,
    as_function,
    difference_pairs,
    difference_sign,
    finite_difference_check,
)
from .implications import FUNCTION_IMPLICATIONS, SEMIGROUP_IMPLICATIONS, apply_implications
from .models import (
    ClassificationReport,
    Finding,
    MIsometryVerdict,
    OrderSign,
    SignProfile,
    SignVerdict,
    Verdict,
    VerdictStatus,
    Witness,
    combine_all,
)
from .sign_profile import sign_profile
from .signs import order_sign, required_sign

__all__ = [
    'CrossCheckReport',
    'CrossCheckRow',
    'classify',
    'classify_non_smooth',
    'cross_check',
    'hyperexpansive_order',
    'polynomial_degree',
    'semigroup_map',
    'ClassifyConfig',
    'sample_grid',
    'Direction',
    'XTPairs',
    'alternating_sum',
    'as_function',
    'difference_pairs',
    'difference_sign',
    'finite_difference_check',
    'FUNCTION_IMPLICATIONS',
    'SEMIGROUP_IMPLICATIONS',
    'apply_implications',
    'ClassificationReport',
    'Finding',
    'MIsometryVerdict',
    'OrderSign',
    'SignProfile',
    'SignVerdict',
    'Verdict',
    'VerdictStatus',
    'Witness',
    'combine_all',
    'sign_profile',
    'order_sign',
    'required_sign',
]
