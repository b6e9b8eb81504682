"""
Tolerance-banded sign detection shared by the derivative, difference and
sequence routes.

The zero band for an order is epsilon = tol * (1 + max |value|); wrong-sign
values below ROUNDING_FLOOR * (1 + max |value|) are rounding noise. Witnesses
are first occurrences in sample order, so callers should pass samples with
increasing x.
"""

from typing import Optional, Sequence

import numpy as np

from .models import OrderSign, SignVerdict, Verdict, Witness

# Relative size of values treated as rounding noise when checking signs
ROUNDING_FLOOR = 1e-12


def _witness(values: np.ndarray, points: np.ndarray, mask: np.ndarray,
             order: int, steps: Optional[np.ndarray]) -> Optional[Witness]:
    hits = np.flatnonzero(mask)
    if hits.size == 0:
        return None
    i = int(hits[0])
    t = float(steps[i]) if steps is not None else None
    x = points[i]
    x = int(x) if isinstance(x, (np.integer, int)) else float(x)
    return Witness(x=x, value=float(values[i]), order=order, t=t)


def order_sign(
    values: Sequence[float],
    points: Sequence[float],
    order: int,
    tol: float,
    steps: Optional[Sequence[float]] = None,
) -> OrderSign:
    """
    Classify the sign of sampled values.

    Args:
        values: Sampled values (derivatives, differences or sequence terms)
        points: Sample locations, same length as values
        order: Order reported in witnesses
        tol: Relative tolerance for the zero band
        steps: Optional per-sample step t (difference route)

    Returns:
        OrderSign with verdict and first-occurrence witnesses
    """
    values = np.asarray(values, dtype=float).reshape(-1)
    points = np.asarray(points).reshape(-1)
    steps = None if steps is None else np.asarray(steps, dtype=float).reshape(-1)
    if values.size == 0:
        raise ValueError(f"No samples for order {order}")
    if points.size != values.size:
        raise ValueError(f"Got {values.size} values for {points.size} points")

    scale = float(np.max(np.abs(values)))
    epsilon = tol * (1.0 + scale)
    noise = min(tol, ROUNDING_FLOOR) * (1.0 + scale)
    negative = _witness(values, points, values < -epsilon, order, steps)
    positive = _witness(values, points, values > epsilon, order, steps)

    if negative is None and positive is None:
        verdict = SignVerdict.ZERO
    elif negative is None:
        verdict = SignVerdict.NON_NEGATIVE
    elif positive is None:
        verdict = SignVerdict.NON_POSITIVE
    else:
        verdict = SignVerdict.MIXED

    return OrderSign(
        order=order,
        verdict=verdict,
        epsilon=epsilon,
        min_value=float(np.min(values)),
        max_value=float(np.max(values)),
        negative_witness=negative,
        positive_witness=positive,
        noise=noise,
    )


def required_sign(sign_data: OrderSign, sign: int) -> Verdict:
    """
    Check that one order has the required sign (+1 for >= 0, -1 for <= 0).

    Fails when a sample violates the sign beyond the zero band; Holds when
    the order is Zero or no sample has the wrong sign beyond rounding noise;
    Inconclusive when the only wrong-sign samples lie inside the band.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if sign > 0:
        violation = sign_data.negative_witness
        clean = sign_data.min_value >= -sign_data.noise
    else:
        violation = sign_data.positive_witness
        clean = sign_data.max_value <= sign_data.noise
    if violation is not None:
        return Verdict.fails(violation)
    if sign_data.verdict is SignVerdict.ZERO or clean:
        return Verdict.holds()
    return Verdict.inconclusive(
        f"order {sign_data.order} has wrong-sign samples inside the tolerance band"
    )
