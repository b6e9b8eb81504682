"""
Exceptions for the discretised operator layer.
"""

from typing import Optional


class GridMismatchError(ValueError):
    """Two sampled functions live on different grids."""


class ShiftAlignmentError(ValueError):
    """A shift t is negative or not a whole number of grid steps."""

    def __init__(self, t: float, h: float):
        self.t = t
        self.h = h
        super().__init__(f"Shift t={t!r} is not a non-negative multiple of the grid step h={h!r}")


class ZeroWeightError(ValueError):
    """A weight that must be inverted is zero."""

    def __init__(self, index: int, x: Optional[float] = None):
        self.index = index
        self.x = x
        super().__init__(f"Zero weight at node {index} (x={x!r})")
