#!/usr/bin/env python3
"""
Weighted translation semigroup analyzer

Usage:
    python wtsa.py classify --symbol "log(x+2)"
    python wtsa.py dual --symbol "x+1" --json
    python wtsa.py fit --kind cm --symbol "1/(x+1)" --output fit.json

Environment Variables:
    LOG_LEVEL - Logging level (default: WARNING)
"""

import sys

from src.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
