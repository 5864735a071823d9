r"""Bessel functions of integer order for the radial product series.

:math:`J_n(x)` comes from Miller's backward recurrence normalized with
:math:`J_0 + 2\sum_k J_{2k} = 1`.  :math:`Y_0` and :math:`Y_1` come from
the Neumann series over the same :math:`J_{2k}` values, and higher orders
from forward recurrence, which is stable for the second kind.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BesselSequence",
    "bessel_j_sequence",
    "bessel_y_sequence",
    "miller_start",
]

_RESCALE_AT = 1e250
_SMALL_X = 1e-8


@dataclass(frozen=True)
class BesselSequence:
    """Values ``Z_0(x), ..., Z_order_max(x)`` at a single argument."""

    order_max: int
    argument: float
    values: np.ndarray

    def recurrence_residual(self) -> np.ndarray:
        """|Z_{n-1} + Z_{n+1} - (2n/x) Z_n| for the interior orders."""
        z = self.values
        n = np.arange(1, self.order_max)
        return np.abs(z[:-2] + z[2:] - (2.0 * n / self.argument) * z[1:-1])


def miller_start(x: float, order_max: int) -> int:
    """Even starting order for the backward recurrence.

    The start has to clear both the highest wanted order and the argument,
    since :math:`J_n(x)` only starts to decay once ``n > x``.
    """
    top = max(order_max, math.ceil(x))
    m = top + 20 + math.ceil(2.0 * math.sqrt(top * max(1.0, x)))
    return m + (m % 2)


def _j_backward(x: float, order_max: int) -> np.ndarray:
    """J_0 .. J_m by normalized backward recurrence, m >= order_max."""
    m = miller_start(x, order_max)
    vals = np.zeros(m + 1)
    j_next, j_cur = 0.0, 1.0
    vals[m] = j_cur
    for k in range(m, 0, -1):
        j_prev = (2.0 * k / x) * j_cur - j_next
        if abs(j_prev) > _RESCALE_AT:
            vals[k:] /= _RESCALE_AT
            j_cur /= _RESCALE_AT
            j_prev /= _RESCALE_AT
        vals[k - 1] = j_prev
        j_next, j_cur = j_cur, j_prev
    norm = vals[0] + 2.0 * vals[2::2].sum()
    return vals / norm


def _j_small(x: float, order_max: int) -> np.ndarray:
    # two terms of the ascending series; the next one is below 1e-32 relative
    n = np.arange(order_max + 1)
    h = 0.5 * x
    lead = np.exp(n * math.log(h) - np.array([math.lgamma(k + 1.0) for k in n]))
    return lead * (1.0 - h * h / (n + 1.0))


def bessel_j_sequence(x: float, order_max: int) -> BesselSequence:
    """Bessel functions of the first kind ``J_0(x) .. J_order_max(x)``.

    Parameters
    ----------
    x : float
        Argument, ``x >= 0``.
    order_max : int
        Highest order returned, ``>= 0``.

    Returns
    -------
    BesselSequence

    Raises
    ------
    ValueError
        If ``x < 0`` or ``order_max < 0``.
    """
    x = float(x)
    if not x >= 0.0:
        raise ValueError(f"J_n needs x >= 0, got {x}")
    if order_max < 0:
        raise ValueError("order_max must be >= 0")
    if x == 0.0:
        values = np.zeros(order_max + 1)
        values[0] = 1.0
    elif x < _SMALL_X:
        values = _j_small(x, order_max)
    else:
        values = _j_backward(x, order_max)[: order_max + 1].copy()
    return BesselSequence(order_max, x, values)


def _y01(x: float, j: np.ndarray) -> tuple[float, float]:
    """Y_0 and Y_1 from the Neumann series over a long J sequence."""
    c = math.log(0.5 * x) + np.euler_gamma
    kmax = (j.size - 2) // 2
    k = np.arange(1, kmax + 1)
    sign = np.where(k % 2 == 0, 1.0, -1.0)
    s0 = np.sum(sign * j[2 * k] / k)
    y0 = (2.0 / math.pi) * (c * j[0] - 2.0 * s0)
    s1 = np.sum(sign * (j[2 * k - 1] - j[2 * k + 1]) / k)
    y1 = -(2.0 / math.pi) * (j[0] / x - c * j[1] - s1)
    return float(y0), float(y1)


def bessel_y_sequence(x: float, order_max: int) -> BesselSequence:
    """Bessel functions of the second kind ``Y_0(x) .. Y_order_max(x)``.

    Raises
    ------
    ValueError
        If ``x <= 0`` (the functions are singular at the origin).
    """
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"Y_n needs x > 0, got {x}")
    if order_max < 0:
        raise ValueError("order_max must be >= 0")
    if x < _SMALL_X:
        # the Neumann tail is negligible here, only the leading terms survive
        j = _j_small(x, 3)
        j = np.concatenate([j, np.zeros(2)])
    else:
        j = _j_backward(x, 1)
    y0, y1 = _y01(x, j)
    values = np.empty(order_max + 1)
    values[0] = y0
    if order_max >= 1:
        values[1] = y1
    with np.errstate(over="ignore"):
        for n in range(1, order_max):
            values[n + 1] = (2.0 * n / x) * values[n] - values[n - 1]
    return BesselSequence(order_max, x, values)
