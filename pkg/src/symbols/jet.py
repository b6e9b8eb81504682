"""
Truncated Taylor series ("jets") for exact higher derivatives.

A jet of order K at base point x0 stores coeffs[k] = f^(k)(x0) / k! for
k = 0..K. Jets are vectorised: `base_point` may be an array, in which case
`coeffs` has shape (K+1, *base_point.shape) and every recurrence below runs
elementwise over the trailing axes.

Every recurrence is causal (coefficient k only reads coefficients < k), so a
jet of order K agrees exactly with the first K+1 coefficients of any higher
order jet at the same point.
"""

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import SymbolDomainError

Scalar = Union[int, float]


def domain_error(message: str, mask: np.ndarray, base_point: np.ndarray) -> SymbolDomainError:
    """Build a SymbolDomainError pointing at the first flagged sample."""
    base = np.asarray(base_point, dtype=float)
    if base.ndim == 0:
        return SymbolDomainError(message, x=float(base))
    index = int(np.flatnonzero(np.broadcast_to(mask, base.shape))[0])
    return SymbolDomainError(message, index=index, x=float(base.reshape(-1)[index]))


@dataclass(frozen=True, eq=False)
class Jet:
    """
    Truncated Taylor expansion of order K.

    Attributes:
        base_point: Expansion point(s) x0
        coeffs: Array of shape (K+1, *base_point.shape), coeffs[k] = f^(k)(x0)/k!
    """
    base_point: np.ndarray
    coeffs: np.ndarray

    def __post_init__(self):
        base = np.array(self.base_point, dtype=float)
        coeffs = np.array(self.coeffs, dtype=float)
        if coeffs.ndim < 1 or coeffs.shape[0] < 1:
            raise ValueError("Jet needs at least one coefficient")
        if coeffs.shape[1:] != base.shape:
            raise ValueError(
                f"Coefficient shape {coeffs.shape} does not match base point shape {base.shape}"
            )
        base.setflags(write=False)
        coeffs.setflags(write=False)
        object.__setattr__(self, "base_point", base)
        object.__setattr__(self, "coeffs", coeffs)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def constant(cls, value, base_point, order: int) -> "Jet":
        base = np.asarray(base_point, dtype=float)
        coeffs = np.zeros((order + 1,) + base.shape)
        coeffs[0] = value
        return cls(base, coeffs)

    @classmethod
    def variable(cls, base_point, order: int) -> "Jet":
        """Jet of the identity function x at x0."""
        base = np.asarray(base_point, dtype=float)
        coeffs = np.zeros((order + 1,) + base.shape)
        coeffs[0] = base
        if order >= 1:
            coeffs[1] = 1.0
        return cls(base, coeffs)

    @property
    def order(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def value(self) -> np.ndarray:
        return self.coeffs[0]

    @property
    def derivatives(self) -> np.ndarray:
        """Derivatives f^(k)(x0) for k = 0..K (coefficients times k!)."""
        factorials = np.array([math.factorial(k) for k in range(self.order + 1)], dtype=float)
        return self.coeffs * factorials.reshape((-1,) + (1,) * (self.coeffs.ndim - 1))

    def _new(self, coeffs: np.ndarray) -> "Jet":
        return Jet(self.base_point, coeffs)

    def _coerce(self, other) -> "Jet":
        if isinstance(other, Jet):
            if other.order != self.order:
                raise ValueError(f"Jet order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Jet.constant(float(other), self.base_point, self.order)
        return NotImplemented

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def __neg__(self) -> "Jet":
        return self._new(-self.coeffs)

    def __add__(self, other) -> "Jet":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._new(self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other) -> "Jet":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._new(self.coeffs - other.coeffs)

    def __rsub__(self, other) -> "Jet":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "Jet":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        out = np.zeros_like(a)
        for k in range(self.order + 1):
            out[k] = sum(a[j] * b[k - j] for j in range(k + 1))
        return self._new(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Jet":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        zero = b[0] == 0
        if np.any(zero):
            raise domain_error("Division by zero", zero, self.base_point)
        q = np.zeros_like(a)
        for k in range(self.order + 1):
            acc = a[k] - sum(b[j] * q[k - j] for j in range(1, k + 1))
            q[k] = acc / b[0]
        return self._new(q)

    def __rtruediv__(self, other) -> "Jet":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    # ------------------------------------------------------------------
    # Elementary functions
    # ------------------------------------------------------------------

    def exp(self) -> "Jet":
        a = self.coeffs
        e = np.zeros_like(a)
        e[0] = np.exp(a[0])
        for k in range(1, self.order + 1):
            e[k] = sum(j * a[j] * e[k - j] for j in range(1, k + 1)) / k
        return self._new(e)

    def log(self) -> "Jet":
        a = self.coeffs
        bad = ~(a[0] > 0)
        if np.any(bad):
            raise domain_error("Logarithm of non-positive value", bad, self.base_point)
        out = np.zeros_like(a)
        out[0] = np.log(a[0])
        for k in range(1, self.order + 1):
            acc = sum(j * out[j] * a[k - j] for j in range(1, k)) / k
            out[k] = (a[k] - acc) / a[0]
        return self._new(out)

    def sqrt(self) -> "Jet":
        a = self.coeffs
        # sqrt(0) is a value but not a smooth point
        bad = ~(a[0] > 0) if self.order >= 1 else ~(a[0] >= 0)
        if np.any(bad):
            raise domain_error("Square root of non-positive value", bad, self.base_point)
        s = np.zeros_like(a)
        s[0] = np.sqrt(a[0])
        for k in range(1, self.order + 1):
            acc = sum(s[j] * s[k - j] for j in range(1, k))
            s[k] = (a[k] - acc) / (2.0 * s[0])
        return self._new(s)

    def sinh_cosh(self):
        """Return the (sinh, cosh) pair, built by their coupled recurrence."""
        a = self.coeffs
        s = np.zeros_like(a)
        c = np.zeros_like(a)
        s[0] = np.sinh(a[0])
        c[0] = np.cosh(a[0])
        for k in range(1, self.order + 1):
            s[k] = sum(j * a[j] * c[k - j] for j in range(1, k + 1)) / k
            c[k] = sum(j * a[j] * s[k - j] for j in range(1, k + 1)) / k
        return self._new(s), self._new(c)

    def sinh(self) -> "Jet":
        return self.sinh_cosh()[0]

    def cosh(self) -> "Jet":
        return self.sinh_cosh()[1]

    def tanh(self) -> "Jet":
        s, c = self.sinh_cosh()
        return s / c

    def int_power(self, n: int) -> "Jet":
        """f^n for integer n by binary exponentiation; negative n gives 1/f^|n|."""
        if n < 0:
            return 1.0 / self.int_power(-n)
        result = Jet.constant(1.0, self.base_point, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def power(self, exponent: "Jet") -> "Jet":
        """f^g for a general exponent, as exp(g * log f)."""
        return (exponent * self.log()).exp()

    def __repr__(self) -> str:
        return f"Jet(order={self.order}, base_point={self.base_point!r})"
