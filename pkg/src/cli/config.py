"""
Run configuration for the command-line interface.

Values come from an optional flat `key=value` file (read with python-dotenv)
and from command-line flags; flags win.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np
from dotenv import dotenv_values

from ..classify import ClassifyConfig
from ..classify.config import DEFAULT_N_UNIFORM, DEFAULT_ORDER, DEFAULT_T_VALUES, DEFAULT_X_MAX
from ..operators import Grid
from ..operators.grid import DEFAULT_N_POINTS
from ..repfit import DEFAULT_ATOM_COUNT, DEFAULT_ATOM_MAX, DEFAULT_ATOM_MIN, log_spaced_atoms
from ..bridge import DEFAULT_TERMS
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

CONFIG_KEYS = (
    "symbol", "order", "xmax", "points", "t", "atoms",
    "amax", "input", "output", "assert", "terms", "kind",
)


class Command(str, Enum):
    CLASSIFY = "classify"
    DUAL = "dual"
    BRIDGE = "bridge"
    FIT = "fit"
    APPLY = "apply"
    REPORT = "report"


class FitKind(str, Enum):
    CM = "cm"
    CA = "ca"
    SUBNORMAL = "subnormal"


class OperatorKind(str, Enum):
    ST = "St"
    ADJOINT = "adjoint"
    DUAL = "dual"


@dataclass(frozen=True)
class RunConfig:
    """
    Everything one CLI invocation needs.

    `n_points` is None when not given: classification then uses its own
    sample grid size and operator work uses DEFAULT_N_POINTS.
    """
    command: Command
    symbol: Optional[str] = None
    order: int = DEFAULT_ORDER
    x_max: float = DEFAULT_X_MAX
    n_points: Optional[int] = None
    t_values: Tuple[float, ...] = ()
    atoms: Optional[str] = None
    a_max: Optional[float] = None
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    assert_classes: Tuple[str, ...] = ()
    terms: int = DEFAULT_TERMS
    kind: FitKind = FitKind.CM
    operator: OperatorKind = OperatorKind.ST
    as_json: bool = False

    def __post_init__(self):
        object.__setattr__(self, "command", Command(self.command))
        object.__setattr__(self, "kind", FitKind(self.kind))
        object.__setattr__(self, "operator", OperatorKind(self.operator))
        object.__setattr__(self, "t_values", tuple(float(t) for t in self.t_values))
        object.__setattr__(self, "assert_classes", tuple(self.assert_classes))

        if self.symbol is None and not (self.command is Command.FIT and self.input_path):
            raise ValueError(f"'{self.command.value}' needs --symbol")
        if self.command is Command.APPLY:
            if not self.input_path:
                raise ValueError("'apply' needs --input")
            if len(self.t_values) != 1:
                raise ValueError("'apply' needs exactly one --t")
        if self.command is Command.FIT and self.kind is FitKind.SUBNORMAL and self.a_max is None:
            raise ValueError("'fit --kind subnormal' needs --amax")

        if self.order < 1:
            raise ValueError(f"--order must be positive, got {self.order}")
        if not self.x_max > 0:
            raise ValueError(f"--xmax must be positive, got {self.x_max}")
        if self.n_points is not None and self.n_points < 2:
            raise ValueError(f"--points must be at least 2, got {self.n_points}")
        if any(t < 0 for t in self.t_values):
            raise ValueError("--t values must be non-negative")
        if self.command is not Command.APPLY and any(t == 0 for t in self.t_values):
            raise ValueError("--t values must be positive")
        if self.a_max is not None and not self.a_max > 0:
            raise ValueError(f"--amax must be positive, got {self.a_max}")
        if self.terms < 1:
            raise ValueError(f"--terms must be positive, got {self.terms}")

    def classify_config(self) -> ClassifyConfig:
        return ClassifyConfig(
            order=self.order,
            x_max=self.x_max,
            n_uniform=self.n_points or DEFAULT_N_UNIFORM,
            t_values=self.t_values or DEFAULT_T_VALUES,
        )

    def grid(self) -> Grid:
        return Grid(self.x_max, self.n_points or DEFAULT_N_POINTS)

    def atom_grid(self) -> np.ndarray:
        return parse_atoms(self.atoms)


def parse_atoms(text: Optional[str]) -> np.ndarray:
    """
    Atom grid from `lo:hi:n` (log-spaced) or a comma-separated list.

    Example:
        >>> parse_atoms("0.5,1,2")
        array([0.5, 1. , 2. ])
    """
    if text is None or not text.strip():
        return log_spaced_atoms(DEFAULT_ATOM_MIN, DEFAULT_ATOM_MAX, DEFAULT_ATOM_COUNT)
    try:
        if ":" in text:
            lo, hi, n = text.split(":")
            return log_spaced_atoms(float(lo), float(hi), int(n))
        return np.unique(np.array([float(a) for a in text.split(",") if a.strip()]))
    except ValueError as e:
        raise ValueError(f"Invalid --atoms '{text}': expected lo:hi:n or a comma list ({e})")


def read_config_file(path: str) -> Dict[str, str]:
    """
    Flat key=value settings; unknown keys are ignored with a warning.

    Raises:
        FileNotFoundError: path does not exist
    """
    with open(path) as handle:
        values = dotenv_values(stream=handle)
    settings = {}
    for key, value in values.items():
        if key in CONFIG_KEYS:
            if value is not None:
                settings[key] = value
        else:
            logger.warning(f"Ignoring unknown config key '{key}' in {path}")
    return settings


def _split(value: Optional[str]) -> List[str]:
    if not value:
        return []
    return [part.strip() for part in value.split(",") if part.strip()]


def build_run_config(args, file_settings: Optional[Dict[str, str]] = None) -> RunConfig:
    """
    Merge parsed flags over file settings.

    Args:
        args: argparse namespace from create_parser()
        file_settings: Output of read_config_file (optional)
    """
    fs = file_settings or {}

    def pick(flag_value, key, convert):
        if flag_value is not None:
            return flag_value
        if key in fs:
            try:
                return convert(fs[key])
            except ValueError:
                raise ValueError(f"Invalid value for '{key}' in config file: {fs[key]!r}")
        return None

    t_values = args.t if args.t else [float(t) for t in _split(fs.get("t"))]
    asserted = args.assert_classes if args.assert_classes else _split(fs.get("assert"))

    options = dict(
        command=args.command,
        symbol=pick(args.symbol, "symbol", str),
        n_points=pick(args.points, "points", int),
        t_values=tuple(t_values),
        atoms=pick(getattr(args, "atoms", None), "atoms", str),
        a_max=pick(getattr(args, "amax", None), "amax", float),
        input_path=pick(args.input, "input", str),
        output_path=pick(args.output, "output", str),
        assert_classes=tuple(asserted),
        as_json=bool(args.json),
    )
    for name, key, convert in (("order", "order", int), ("x_max", "xmax", float),
                               ("terms", "terms", int)):
        value = pick(getattr(args, key, None), key, convert)
        if value is not None:
            options[name] = value
    kind = pick(getattr(args, "kind", None), "kind", str)
    if kind is not None:
        options["kind"] = kind
    operator = getattr(args, "operator", None)
    if operator is not None:
        options["operator"] = operator
    return RunConfig(**options)
