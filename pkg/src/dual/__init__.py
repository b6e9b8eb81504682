"""
Cauchy dual semigroups: symbol 1/phi, left invertibility and dual theorems.
"""

from .cauchy import (
    MARGIN_FLOOR,
    apply_dual,
    apply_gram_inverse,
    certifies_hyperexpansive,
    dual_symbol,
    is_left_invertible,
    left_inv_margin,
)
from .report import DualReport, analyze_dual
from .theorems import (
    DUAL_IMPLICATIONS,
    CheckStatus,
    TheoremCheck,
    theorem_checks,
    verify_dual_theorems,
)

__all__ = [
    'MARGIN_FLOOR',
    'apply_dual',
    'apply_gram_inverse',
    'certifies_hyperexpansive',
    'dual_symbol',
    'is_left_invertible',
    'left_inv_margin',
    'DualReport',
    'analyze_dual',
    'DUAL_IMPLICATIONS',
    'CheckStatus',
    'TheoremCheck',
    'theorem_checks',
    'verify_dual_theorems',
]
