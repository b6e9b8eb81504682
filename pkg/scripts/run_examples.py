#!/usr/bin/env python3
"""
Regression table over the symbol fixture registry.

Classifies every fixture (piecewise ones through the difference route),
classifies the dual where expectations are given, and prints one line per
expected verdict.

Run with: python scripts/run_examples.py [--order 8] [--fixtures PATH]
"""

import argparse
import os
import sys
from typing import List, Tuple

from tqdm import tqdm

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.classify import ClassifyConfig, classify, classify_non_smooth
from src.dual import dual_symbol
from src.utils.fixtures import Fixture, load_fixtures
from src.utils.logging_config import setup_logging

Row = Tuple[str, str, str, str, bool]


def check_fixture(fixture: Fixture, cfg: ClassifyConfig) -> List[Row]:
    """Compare the classification of one fixture with its expectations."""
    if fixture.is_piecewise:
        report = classify_non_smooth(fixture.function(), cfg, label=fixture.label)
    else:
        report = classify(fixture.expr(), cfg)

    rows = []
    for name, expected in fixture.expect.items():
        actual = report.lookup(name).status.value
        rows.append((fixture.name, name, expected, actual, actual == expected))
    if fixture.m is not None:
        actual_m = str(report.m_isometry.m)
        rows.append((fixture.name, "m", str(fixture.m), actual_m, actual_m == str(fixture.m)))

    if fixture.dual_expect:
        dual_report = classify(dual_symbol(fixture.expr()), cfg)
        for name, expected in fixture.dual_expect.items():
            actual = dual_report.lookup(name).status.value
            rows.append((fixture.name, f"dual:{name}", expected, actual, actual == expected))
    return rows


def main() -> int:
    parser = argparse.ArgumentParser(description="Run the fixture regression table")
    parser.add_argument("--order", type=int, default=8, help="Derivative order (default: 8)")
    parser.add_argument("--fixtures", help="Fixture registry (default: config/symbol_fixtures.json)")
    args = parser.parse_args()

    setup_logging()
    cfg = ClassifyConfig(order=args.order)
    fixtures = load_fixtures(args.fixtures)

    rows: List[Row] = []
    for fixture in tqdm(fixtures, desc="fixtures", unit="symbol"):
        rows.extend(check_fixture(fixture, cfg))

    print("=" * 78)
    print(f"{'fixture':<26} {'class':<30} {'expected':<10} {'actual':<10}")
    print("-" * 78)
    for name, cls, expected, actual, ok in rows:
        mark = "" if ok else "  <-- MISMATCH"
        print(f"{name:<26} {cls:<30} {expected:<10} {actual:<10}{mark}")
    print("=" * 78)

    mismatches = sum(1 for row in rows if not row[4])
    print(f"{len(rows) - mismatches}/{len(rows)} verdicts as expected")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
