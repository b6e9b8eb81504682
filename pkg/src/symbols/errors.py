"""
Exceptions raised while parsing and evaluating symbol expressions.

All of them subclass ValueError so callers can treat any bad symbol input
uniformly.
"""

from typing import Optional


class ExpressionSyntaxError(ValueError):
    """Symbol text does not conform to the expression grammar."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (at byte offset {offset})")


class UnknownIdentifierError(ExpressionSyntaxError):
    """An identifier that is neither `x` nor a supported function."""

    def __init__(self, name: str, offset: int, suggestion: Optional[str] = None):
        self.name = name
        self.suggestion = suggestion
        message = f"Unknown identifier '{name}'"
        if suggestion:
            message += f"; did you mean '{suggestion}'?"
        super().__init__(message, offset)


class ArityError(ExpressionSyntaxError):
    """A function was called with the wrong number of arguments."""

    def __init__(self, name: str, expected: int, got: int, offset: int):
        self.name = name
        self.expected = expected
        self.got = got
        super().__init__(
            f"Function '{name}' takes {expected} argument(s), got {got}", offset
        )


class SymbolDomainError(ValueError):
    """
    Expression evaluated outside the region where it is smooth.

    Attributes:
        index: Flat index of the first offending sample (None for scalar input)
        x: Location of the first offending sample
    """

    def __init__(self, message: str, index: Optional[int] = None, x: Optional[float] = None):
        self.index = index
        self.x = x
        if index is not None:
            message = f"{message} at sample {index} (x={x!r})"
        elif x is not None:
            message = f"{message} at x={x!r}"
        super().__init__(message)


class PositivityError(SymbolDomainError):
    """Symbol is not strictly positive where the semigroup needs it to be."""


class JetOrderError(ValueError):
    """Requested jet order exceeds the supported maximum."""
