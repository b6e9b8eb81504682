"""
Utility modules for the semigroup analyzer.
"""

from .logging_config import setup_logging, get_logger, get_log_level

__all__ = [
    'setup_logging',
    'get_logger',
    'get_log_level',
]
