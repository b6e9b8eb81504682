"""
Pytest configuration and shared fixtures for all tests.
"""

import pytest
import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.classify import ClassifyConfig
from src.operators import Grid
from src.utils.fixtures import load_fixtures


# Symbols used across the suites (closed-form fixtures of the registry)
SMOOTH_SYMBOLS = [
    "sqrt(x+1)",
    "x^3 + x^2 + x + 1",
    "log(x+2)",
    "2 - exp(-x)",
    "x+1",
    "1/(x+1)",
    "exp(-x)",
    "(x+0.5)/(x+1)",
    "(x+2)/(x+1)",
    "exp(x)",
    "2*x - log(cosh(x-10)) + 100",
    "1",
]

COMPLETELY_ALTERNATING = [
    "sqrt(x+1)",
    "log(x+2)",
    "2 - exp(-x)",
    "x+1",
    "(x+0.5)/(x+1)",
    "1",
]

CONCAVE = COMPLETELY_ALTERNATING + ["2*x - log(cosh(x-10)) + 100"]

COUNTEREXAMPLE = "2*x - log(cosh(x-10)) + 100"


@pytest.fixture(scope="session")
def project_root():
    """Return the project root directory."""
    return Path(__file__).parent.parent


@pytest.fixture(scope="session")
def fixtures_path(project_root):
    """Return the symbol fixture registry path."""
    return project_root / "config" / "symbol_fixtures.json"


@pytest.fixture(scope="session")
def registry(fixtures_path):
    """All registry fixtures."""
    return load_fixtures(fixtures_path)


@pytest.fixture(scope="session")
def default_config():
    """Default classification settings."""
    return ClassifyConfig()


@pytest.fixture(scope="session")
def small_config():
    """Coarser settings for suites that classify many symbols."""
    return ClassifyConfig(order=6, n_uniform=101, n_geometric=20)


@pytest.fixture(scope="session")
def operator_grid():
    """Operator grid h = 0.01 on [0, 20]."""
    return Grid(20.0, 2001)
