"""
Semigroup analyzer CLI - Command Line Interface.

Parses a symbol and runs classification, Cauchy-dual analysis, the
weighted-shift bridge, representation fits or operator application.

Exit codes: 0 success, 1 an --assert did not hold, 2 bad input.
"""

import argparse
import os
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from dotenv import load_dotenv
from fuzzywuzzy import process
from tqdm import tqdm

from ..bridge import analyze_bridge, shift_weights_to_frame
from ..classify import ClassificationReport, classify, cross_check
from ..dual import CheckStatus, DualReport, analyze_dual, apply_dual
from ..operators import Grid, SampledFunction, apply_adjoint, apply_st, sample
from ..repfit import (
    FitResult,
    NNLSConvergenceError,
    estimate_growth_bound,
    fit_ca,
    fit_cm,
    fit_subnormal,
    weight_limit_check,
)
from ..symbols import Expr, SymbolDomainError, parse, to_text
from ..utils.logging_config import get_logger, setup_logging
from .config import (
    Command,
    FitKind,
    OperatorKind,
    RunConfig,
    build_run_config,
    read_config_file,
)
from .serialization import document, dumps

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_ASSERT = 1
EXIT_INPUT = 2

# Highest n compared by the cross-check
CROSS_CHECK_MAX_N = 6

# Sample count for fits when --points is not given
DEFAULT_FIT_POINTS = 201

# Points x for the phi_t -> 1 tail check, run only for completely alternating symbols
WEIGHT_LIMIT_POINTS = (1e2, 1e3, 1e4)

# Shift for the tail check when no --t is given
WEIGHT_LIMIT_T = 1.0


class AssertionFailed(Exception):
    """One or more --assert classes did not hold."""

    def __init__(self, failed: List[str]):
        self.failed = failed
        super().__init__(f"Assertion failed: {', '.join(failed)}")


class AnalyzerCLI:
    """Runs one configured command and collects its outputs."""

    def __init__(self, cfg: RunConfig):
        """
        Args:
            cfg: Validated run configuration
        """
        self.cfg = cfg
        self.expr: Optional[Expr] = parse(cfg.symbol) if cfg.symbol is not None else None
        self.checks: Dict[str, bool] = {}
        self._last_classification: Optional[ClassificationReport] = None
        self._bridge_report = None
        self._fit_result: Optional[FitResult] = None

    # ------------------------------------------------------------------
    # Commands
    # ------------------------------------------------------------------

    def classify(self) -> dict:
        cfg = self.cfg.classify_config()
        report = classify(self.expr, cfg)
        self._add_classification_checks(report)
        body = {"classification": report.to_dict()}
        if report.positivity.is_holds:
            n_max = min(CROSS_CHECK_MAX_N, cfg.order)
            body["cross_check"] = cross_check(self.expr, n_max, cfg).to_dict()
        return body

    def dual(self) -> dict:
        cfg = self.cfg.classify_config()
        report = analyze_dual(self.expr, cfg, grid=self.cfg.grid())
        self._add_classification_checks(report.classification)
        self._add_dual_checks(report)
        return {"dual": report.to_dict()}

    def bridge(self) -> dict:
        report = analyze_bridge(self.expr, self.cfg.terms, self.cfg.order)
        self.checks.update({
            f"beta:{name}": getattr(report.beta_verdicts, name).is_holds
            for name in ("completely_monotone", "completely_alternating")
        })
        self.checks.update({
            f"reciprocal_beta:{name}": getattr(report.dual_verdicts, name).is_holds
            for name in ("completely_monotone", "completely_alternating")
        })
        self._bridge_report = report
        return {"bridge": report.to_dict()}

    def fit(self, kind: Optional[FitKind] = None) -> dict:
        kind = kind or self.cfg.kind
        samples = self._samples()
        if kind is FitKind.CM:
            result = fit_cm(samples, self.cfg.atom_grid())
        elif kind is FitKind.CA:
            result = fit_ca(samples, self.cfg.atom_grid())
        else:
            result = fit_subnormal(samples, self.cfg.a_max)

        body = {"kind": kind.value, "samples": samples.grid.n_points, **result.to_dict()}
        if self.expr is not None:
            body["growth_bound"] = estimate_growth_bound(self.expr, samples.grid)
            if kind is FitKind.CA and self._symbol_classification().function_class(
                    "completely_alternating").is_holds:
                body["weight_limit"] = self._weight_limit()
        self.checks[f"{kind.value}_representable"] = result.representable
        self._fit_result = result
        return {"fit": body}

    def apply(self) -> SampledFunction:
        f = SampledFunction.from_csv(self.cfg.input_path)
        t = self.cfg.t_values[0]
        operators: Dict[OperatorKind, Callable] = {
            OperatorKind.ST: apply_st,
            OperatorKind.ADJOINT: apply_adjoint,
            OperatorKind.DUAL: apply_dual,
        }
        logger.info(f"Applying {self.cfg.operator.value} with t={t} to {f.grid.n_points} samples")
        return operators[self.cfg.operator](self.expr, t, f)

    def report(self) -> dict:
        """Every analysis merged into one document."""
        stages = [("classification", self.classify), ("dual", self.dual), ("bridge", self.bridge)]
        stages += [(f"fit:{k.value}", lambda k=k: self.fit(k)) for k in (FitKind.CM, FitKind.CA)]
        if self.cfg.a_max is not None:
            stages.append(("fit:subnormal", lambda: self.fit(FitKind.SUBNORMAL)))

        body = {}
        fits = {}
        for name, stage in tqdm(stages, desc="report", unit="stage", file=sys.stderr,
                                disable=not sys.stderr.isatty()):
            part = stage()
            if name.startswith("fit:"):
                fits[name[4:]] = part["fit"]
            else:
                body.update(part)
        body["fits"] = fits
        return body

    # ------------------------------------------------------------------
    # Assertions
    # ------------------------------------------------------------------

    def _add_classification_checks(self, report: ClassificationReport) -> None:
        self._last_classification = report
        names = ["positivity", *report.function_classes, *report.semigroup_classes, "m_isometry"]
        for name in names:
            self.checks[name] = report.lookup(name).is_holds

    def _add_dual_checks(self, report: DualReport) -> None:
        if report.dual_classification is not None:
            dual = report.dual_classification
            for name in [*dual.function_classes, *dual.semigroup_classes]:
                self.checks[f"dual:{name}"] = dual.lookup(name).is_holds
        for check in report.theorem_checks:
            self.checks[check.name] = check.status is not CheckStatus.FAIL
        self.checks["left_invertible"] = report.left_invertible

    def failed_assertions(self) -> List[str]:
        """
        Names from --assert that did not hold.

        Raises:
            ValueError: an asserted name is not reported by this command
        """
        failed = []
        for name in self.cfg.assert_classes:
            if name not in self.checks:
                message = f"Unknown class '{name}' for '{self.cfg.command.value}'"
                match = process.extractOne(name, list(self.checks)) if self.checks else None
                if match and match[1] >= 60:
                    message += f"; did you mean '{match[0]}'?"
                raise ValueError(message)
            if not self.checks[name]:
                failed.append(name)
        return failed

    # ------------------------------------------------------------------
    # Helpers
    # ------------------------------------------------------------------

    def _samples(self) -> SampledFunction:
        if self.cfg.input_path:
            return SampledFunction.from_csv(self.cfg.input_path)
        return sample(self.expr, Grid(self.cfg.x_max, self.cfg.n_points or DEFAULT_FIT_POINTS))

    def _symbol_classification(self) -> ClassificationReport:
        if self._last_classification is None:
            self._last_classification = classify(self.expr, self.cfg.classify_config())
        return self._last_classification

    def _weight_limit(self) -> List[dict]:
        """phi_t(x) -> 1 at the tail points; a point outside the float range gives null."""
        t = self.cfg.t_values[0] if self.cfg.t_values else WEIGHT_LIMIT_T
        rows = []
        for x in WEIGHT_LIMIT_POINTS:
            try:
                deviation = weight_limit_check(self.expr, t, x)
            except SymbolDomainError as e:
                logger.warning(f"Weight tail check skipped at x={x}: {e}")
                deviation = None
            rows.append({"x": x, "t": t, "deviation": deviation})
        return rows

    def run(self) -> int:
        """
        Execute the configured command and write its outputs.

        Returns:
            Exit code
        """
        command = self.cfg.command
        if command is Command.APPLY:
            self._emit_text(self.apply().to_csv())
            return EXIT_OK

        handlers = {
            Command.CLASSIFY: self.classify,
            Command.DUAL: self.dual,
            Command.BRIDGE: self.bridge,
            Command.FIT: self.fit,
            Command.REPORT: self.report,
        }
        body = handlers[command]()
        doc = document(command.value, body)
        failed = self.failed_assertions()

        output = self.cfg.output_path
        if output and Path(output).suffix.lower() == ".csv":
            self._write_csv(output)
        elif output:
            Path(output).write_text(dumps(doc))
            logger.info(f"Wrote {output}")

        if self.cfg.as_json:
            sys.stdout.write(dumps(doc))
        elif not output:
            self._display(body)

        if failed:
            raise AssertionFailed(failed)
        return EXIT_OK

    def _emit_text(self, text: str) -> None:
        if self.cfg.output_path:
            Path(self.cfg.output_path).write_text(text)
            logger.info(f"Wrote {self.cfg.output_path}")
        else:
            sys.stdout.write(text)

    def _write_csv(self, path: str) -> None:
        if self.cfg.command is Command.BRIDGE:
            shift_weights_to_frame(self._bridge_report.weights).to_csv(
                path, index=False, float_format="%.17g")
        elif self.cfg.command is Command.FIT:
            self._measure_frame(self._fit_result).to_csv(path, index=False, float_format="%.17g")
        else:
            raise ValueError(f"'{self.cfg.command.value}' has no CSV output; use a .json path")
        logger.info(f"Wrote {path}")

    @staticmethod
    def _measure_frame(result: FitResult):
        rep = result.representation
        measure = getattr(rep, "measure", rep)
        return measure.to_frame()

    def _display(self, body: dict) -> None:
        """Short human-readable summary on stdout."""
        symbol = to_text(self.expr) if self.expr is not None else self.cfg.input_path
        print(f"\n{self.cfg.command.value}: {symbol}")
        print("-" * 50)
        if self.cfg.command in (Command.CLASSIFY, Command.DUAL, Command.REPORT):
            report = self._last_classification
            for name, verdict in report.semigroup_classes.items():
                print(f"  {name:<32} {verdict.status.value}")
            print(f"  {'m_isometry':<32} {report.m_isometry.verdict.status.value}"
                  + (f" (m={report.m_isometry.m})" if report.m_isometry.m else ""))
        if "dual" in body:
            for check in body["dual"]["theorem_checks"]:
                print(f"  {check['name']:<32} {check['status']}")
        if "bridge" in body:
            for key in ("beta", "reciprocal_beta"):
                verdicts = body["bridge"][key]
                print(f"  {key:<16} CM={verdicts['completely_monotone']['status']}"
                      f" CA={verdicts['completely_alternating']['status']}")
        fits = body.get("fits") or ({body["fit"]["kind"]: body["fit"]} if "fit" in body else {})
        for kind, fit in fits.items():
            print(f"  fit {kind:<12} residual={fit['residual']:.3g}"
                  f" representable={fit['representable']}")


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--symbol", help="Symbol phi as an expression in x, e.g. 'log(x+2)'")
    parser.add_argument("--order", type=int, help="Highest derivative order checked (default: 8)")
    parser.add_argument("--xmax", type=float, help="Right end of the window (default: 20)")
    parser.add_argument("--points", type=int, help="Number of uniform grid points")
    parser.add_argument("--t", type=float, action="append",
                        help="Shift t (repeatable)")
    parser.add_argument("--input", help="CSV file with columns x,value")
    parser.add_argument("--output", help="Write the report (.json) or artifact (.csv) here")
    parser.add_argument("--assert", dest="assert_classes", action="append", metavar="CLASS",
                        help="Exit with status 1 unless CLASS holds (repeatable)")
    parser.add_argument("--json", action="store_true", help="Print the JSON report on stdout")
    parser.add_argument("--config", help="Flat key=value file with default settings")


def create_parser() -> argparse.ArgumentParser:
    """Create argument parser for CLI."""
    parser = argparse.ArgumentParser(
        prog="wtsa",
        description="Weighted translation semigroup analyzer"
    )
    parser.add_argument(
        "-v", "--verbose",
        action="store_true",
        help="Enable verbose logging"
    )

    common = argparse.ArgumentParser(add_help=False)
    _add_common_arguments(common)

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    subparsers.add_parser("classify", parents=[common],
                          help="Classify the symbol and its semigroup")
    subparsers.add_parser("dual", parents=[common],
                          help="Cauchy dual analysis and theorem checks")

    bridge_parser = subparsers.add_parser("bridge", parents=[common],
                                          help="Weighted-shift sequences of the symbol")
    bridge_parser.add_argument("--terms", type=int, help="Number of shift weights N (default: 32)")

    fit_parser = subparsers.add_parser("fit", parents=[common],
                                       help="Fit an integral representation")
    fit_parser.add_argument("--kind", choices=[k.value for k in FitKind],
                            help="Representation to fit (default: cm)")
    fit_parser.add_argument("--atoms", help="Atom grid: lo:hi:n (log-spaced) or a comma list")
    fit_parser.add_argument("--amax", type=float, help="Upper end of the moment support")

    apply_parser = subparsers.add_parser("apply", parents=[common],
                                         help="Apply an operator to sampled data")
    apply_parser.add_argument("--operator", choices=[o.value for o in OperatorKind],
                              default=OperatorKind.ST.value,
                              help="Operator to apply (default: St)")

    report_parser = subparsers.add_parser("report", parents=[common],
                                          help="All analyses in one document")
    report_parser.add_argument("--terms", type=int, help="Number of shift weights N (default: 32)")
    report_parser.add_argument("--atoms", help="Atom grid: lo:hi:n (log-spaced) or a comma list")
    report_parser.add_argument("--amax", type=float, help="Upper end of the moment support")

    return parser


def main(args: Optional[list] = None) -> int:
    """
    Main entry point for CLI.

    Args:
        args: Command line arguments (defaults to sys.argv)

    Returns:
        Exit code (0 success, 1 failed assertion, 2 input error)
    """
    load_dotenv()
    parser = create_parser()
    parsed = parser.parse_args(args)

    if parsed.verbose:
        os.environ["LOG_LEVEL"] = "DEBUG"
    setup_logging()

    if not parsed.command:
        parser.print_help()
        return EXIT_OK

    try:
        file_settings = read_config_file(parsed.config) if parsed.config else None
        cfg = build_run_config(parsed, file_settings)
        return AnalyzerCLI(cfg).run()

    except AssertionFailed as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ASSERT
    except (ValueError, KeyError, OSError, NNLSConvergenceError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as e:
        logger.exception(f"Unexpected error: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
