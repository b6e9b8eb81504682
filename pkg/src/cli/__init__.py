"""
Semigroup analyzer CLI.

Command-line interface over the classify, dual, bridge, repfit and
operators packages.
"""

from .config import Command, FitKind, OperatorKind, RunConfig, build_run_config, parse_atoms, read_config_file
from .main import AnalyzerCLI, create_parser, main
from .serialization import SCHEMA_VERSION, document, dumps, to_plain

__all__ = [
    'Command',
    'FitKind',
    'OperatorKind',
    'RunConfig',
    'build_run_config',
    'parse_atoms',
    'read_config_file',
    'AnalyzerCLI',
    'create_parser',
    'main',
    'SCHEMA_VERSION',
    'document',
    'dumps',
    'to_plain',
]
