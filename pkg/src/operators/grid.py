"""
Uniform discretisation of [0, x_max] and functions sampled on it.

Sampled functions are exchanged as CSV files with header `x,value`.
"""

from dataclasses import dataclass
from typing import Union

import numpy as np
import pandas as pd

from ..utils.logging_config import get_logger
from .errors import GridMismatchError, ShiftAlignmentError

logger = get_logger(__name__)

# Default operator grid: h = 0.01 on [0, 20]
DEFAULT_X_MAX = 20.0
DEFAULT_N_POINTS = 2001

# Relative tolerance when matching a shift to the grid step
ALIGNMENT_TOL = 1e-9

CSV_FLOAT_FORMAT = "%.17g"


@dataclass(frozen=True)
class Grid:
    """
    Uniform grid x_i = i*h, h = x_max/(n_points-1).

    Attributes:
        x_max: Right end of the window
        n_points: Number of nodes (>= 2)
    """
    x_max: float = DEFAULT_X_MAX
    n_points: int = DEFAULT_N_POINTS

    def __post_init__(self):
        object.__setattr__(self, "x_max", float(self.x_max))
        object.__setattr__(self, "n_points", int(self.n_points))
        if self.n_points < 2:
            raise ValueError(f"Grid needs at least 2 points, got {self.n_points}")
        if not (np.isfinite(self.x_max) and self.x_max > 0):
            raise ValueError(f"x_max must be positive and finite, got {self.x_max}")

    @classmethod
    def from_nodes(cls, nodes) -> "Grid":
        """
        Recover a grid from its node list.

        Raises:
            ValueError: nodes do not start at 0 or are not uniformly spaced
        """
        nodes = np.asarray(nodes, dtype=float)
        if nodes.ndim != 1 or nodes.size < 2:
            raise ValueError("Need at least 2 nodes")
        grid = cls(x_max=float(nodes[-1]), n_points=int(nodes.size))
        if not np.allclose(nodes, grid.nodes, rtol=0, atol=1e-9 * max(1.0, grid.x_max)):
            raise ValueError("Nodes must be uniform and start at 0")
        return grid

    @property
    def h(self) -> float:
        return self.x_max / (self.n_points - 1)

    @property
    def nodes(self) -> np.ndarray:
        return np.arange(self.n_points) * self.h

    def shift_index(self, t: float) -> int:
        """
        Number of grid steps k with t = k*h.

        Raises:
            ShiftAlignmentError: t negative or not grid-aligned
        """
        t = float(t)
        if t < 0:
            raise ShiftAlignmentError(t, self.h)
        k = int(round(t / self.h))
        if abs(t - k * self.h) > ALIGNMENT_TOL * max(1.0, t):
            raise ShiftAlignmentError(t, self.h)
        return k


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Values of a (real or complex) function at the nodes of a grid."""
    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values)
        if not np.iscomplexobj(values):
            values = values.astype(float)
        if values.shape != (self.grid.n_points,):
            raise ValueError(
                f"Expected {self.grid.n_points} values, got shape {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("Sampled values must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def nodes(self) -> np.ndarray:
        return self.grid.nodes

    def with_values(self, values) -> "SampledFunction":
        return SampledFunction(self.grid, values)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"x": self.nodes, "value": self.values})

    def to_csv(self, path_or_buf=None):
        """Write `x,value` CSV; returns the text when no target is given."""
        if np.iscomplexobj(self.values):
            raise ValueError("CSV export supports real-valued functions only")
        return self.to_frame().to_csv(path_or_buf, index=False, float_format=CSV_FLOAT_FORMAT)

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> "SampledFunction":
        missing = {"x", "value"} - set(frame.columns)
        if missing:
            raise ValueError(f"Missing column(s): {', '.join(sorted(missing))}")
        grid = Grid.from_nodes(frame["x"].to_numpy(dtype=float))
        return cls(grid, frame["value"].to_numpy(dtype=float))

    @classmethod
    def from_csv(cls, path_or_buf) -> "SampledFunction":
        frame = pd.read_csv(path_or_buf, float_precision="round_trip")
        logger.debug(f"Read {len(frame)} samples")
        return cls.from_frame(frame)


def same_grid(*functions: SampledFunction) -> Grid:
    """Common grid of the arguments."""
    grid = functions[0].grid
    for other in functions[1:]:
        if other.grid != grid:
            raise GridMismatchError(f"Grid mismatch: {grid} vs {other.grid}")
    return grid


def trapezoid_weights(grid: Grid) -> np.ndarray:
    """Composite trapezoid quadrature weights."""
    weights = np.full(grid.n_points, grid.h)
    weights[0] = weights[-1] = grid.h / 2
    return weights


def inner(f: SampledFunction, g: SampledFunction) -> Union[float, complex]:
    """
    L2 pairing <f, g> = integral of f * conj(g), by the trapezoid rule.

    Raises:
        GridMismatchError: f and g are sampled on different grids
    """
    grid = same_grid(f, g)
    total = np.sum(trapezoid_weights(grid) * f.values * np.conj(g.values))
    if np.iscomplexobj(total):
        return complex(total)
    return float(total)
