"""
Classification configuration: derivative order, sample grid and tolerance.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..symbols import K_MAX


DEFAULT_ORDER = 8
DEFAULT_X_MAX = 20.0
DEFAULT_N_UNIFORM = 201
DEFAULT_N_GEOMETRIC = 50
DEFAULT_GEOMETRIC_MIN = 1e-3
DEFAULT_T_VALUES = (0.1, 0.25, 0.5, 1.0, 2.0, 5.0)
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class ClassifyConfig:
    """
    Settings shared by classify, cross_check and the dual analysis.

    The sample grid is the union of `n_uniform` uniform points on [0, x_max]
    and `n_geometric` geometric points on [geometric_min, 1]; the geometric
    part is dropped when n_geometric is 0.
    """
    order: int = DEFAULT_ORDER
    x_max: float = DEFAULT_X_MAX
    n_uniform: int = DEFAULT_N_UNIFORM
    n_geometric: int = DEFAULT_N_GEOMETRIC
    geometric_min: float = DEFAULT_GEOMETRIC_MIN
    t_values: Tuple[float, ...] = DEFAULT_T_VALUES
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        object.__setattr__(self, "t_values", tuple(float(t) for t in self.t_values))
        if not 2 <= self.order <= K_MAX:
            raise ValueError(f"order must be between 2 and {K_MAX}, got {self.order}")
        if not self.x_max > 0:
            raise ValueError(f"x_max must be positive, got {self.x_max}")
        if self.n_uniform < 2:
            raise ValueError(f"n_uniform must be at least 2, got {self.n_uniform}")
        if self.n_geometric < 0:
            raise ValueError(f"n_geometric must be non-negative, got {self.n_geometric}")
        if not 0 < self.geometric_min < 1:
            raise ValueError(f"geometric_min must lie in (0, 1), got {self.geometric_min}")
        if not self.t_values or any(t <= 0 for t in self.t_values):
            raise ValueError(f"t_values must be non-empty and positive, got {self.t_values}")
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")

    @property
    def points(self) -> np.ndarray:
        """Sorted, de-duplicated sample grid."""
        uniform = np.linspace(0.0, self.x_max, self.n_uniform)
        if self.n_geometric == 0:
            return uniform
        upper = min(1.0, self.x_max)
        geometric = np.geomspace(self.geometric_min, upper, self.n_geometric)
        return np.unique(np.concatenate([uniform, geometric]))

    def describe(self) -> str:
        text = f"{self.n_uniform} uniform points on [0, {self.x_max:g}]"
        if self.n_geometric:
            text += (
                f" + {self.n_geometric} geometric points on "
                f"[{self.geometric_min:g}, {min(1.0, self.x_max):g}]"
            )
        return text


def sample_grid(cfg: Optional[ClassifyConfig] = None) -> np.ndarray:
    """Sample grid for the given (or default) configuration."""
    return (cfg or ClassifyConfig()).points
