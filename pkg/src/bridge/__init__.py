"""
Weighted-shift bridge: sequences beta_n = phi(n) and their classification.
"""

from .sequences import (
    DEFAULT_TERMS,
    SequenceLengthError,
    ShiftWeights,
    beta_alpha,
    fwd_diff,
    leibniz_check,
    shift_weights_to_frame,
)
from .verdicts import BridgeReport, SequenceVerdicts, analyze_bridge, seq_classify

__all__ = [
    'DEFAULT_TERMS',
    'SequenceLengthError',
    'ShiftWeights',
    'beta_alpha',
    'fwd_diff',
    'leibniz_check',
    'shift_weights_to_frame',
    'BridgeReport',
    'SequenceVerdicts',
    'analyze_bridge',
    'seq_classify',
]
