"""Fractional convolution (Zayed's definition) on the dimensionless grid.

With ``x~ = x * chirp(+)`` the fractional convolution is::

    h = C * chirp(-) * (x~ (*) y~) / sqrt(N)

where ``(*)`` is circular convolution on the centered grid, ``1/sqrt(N)`` is
the grid spacing and ``C = sqrt((1 - j cot phi) / (2 pi))``.  Its transform is
``H_a = (C / A) X_a Y_a chirp(-)`` with ``A = sqrt(1 - j cot phi)``.

Chirps use the same ``exp(j pi cot(phi) u^2)`` convention as the transform
kernel; this is ``exp(j cot(phi) t^2 / 2)`` with ``t = sqrt(2 pi) u``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import IncompatibleSignalsError, SingularOrderError, UnsupportedOrderError
from .frft import frft
from .signal import (
    FrftOrder,
    OrderLike,
    Signal,
    SignalLike,
    as_order,
    as_signal,
    dimensionless_grid,
)


@dataclass(frozen=True, eq=False)
class ChirpWeight:
    samples: np.ndarray
    sign: int
    angle: float


def chirp_weight(n: int, order: OrderLike, sign: int = 1) -> ChirpWeight:
    """Unit-magnitude chirp ``exp(sign * j pi cot(phi) u_n^2)``."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    order = as_order(order)
    cot, _ = order.cot_csc()
    u = dimensionless_grid(n)
    samples = np.exp(sign * 1j * math.pi * cot * u**2)
    samples.setflags(write=False)
    return ChirpWeight(samples, sign, order.angle)


def circconv(x: SignalLike, y: SignalLike) -> Signal:
    """Circular convolution ``sum_n x[n] y[m - n]`` in centered indices (unscaled)."""
    x, y = _compatible(x, y)
    fx = np.fft.fft(np.fft.ifftshift(x.samples))
    fy = np.fft.fft(np.fft.ifftshift(y.samples))
    return x.replace(np.fft.fftshift(np.fft.ifft(fx * fy)))


def zayed_constant(order: OrderLike) -> complex:
    """``sqrt((1 - j cot phi) / (2 pi))``, principal branch."""
    cot, _ = as_order(order).cot_csc()
    return cmath.sqrt((1 - 1j * cot) / (2 * math.pi))


def _compatible(x: SignalLike, y: SignalLike) -> tuple[Signal, Signal]:
    x, y = as_signal(x), as_signal(y)
    if x.n != y.n:
        raise IncompatibleSignalsError(f"length mismatch: {x.n} vs {y.n}")
    if x.dt != y.dt:
        raise IncompatibleSignalsError(f"dt mismatch: {x.dt} vs {y.dt}")
    return x, y


def _admissible(order: OrderLike) -> FrftOrder:
    order = as_order(order)
    try:
        order.cot_csc()
    except SingularOrderError:
        raise UnsupportedOrderError(
            f"fractional convolution is undefined at order {order.a} (cot phi unbounded)"
        ) from None
    return order


def frconv_time(x: SignalLike, y: SignalLike, order: OrderLike) -> Signal:
    """Fractional convolution built in the time domain.

    At ``a = 1`` this is ``circconv(x, y) / sqrt(2 pi N)``.
    """
    x, y = _compatible(x, y)
    order = _admissible(order)
    n = x.n
    up = chirp_weight(n, order, +1).samples
    conv = circconv(x.replace(up * x.samples), y.replace(up * y.samples)).samples
    h = zayed_constant(order) * np.conj(up) * conv / math.sqrt(n)
    return x.replace(h)


def frconv_spectral(x: SignalLike, y: SignalLike, order: OrderLike) -> Signal:
    """Fractional convolution built through the product theorem.

    Forms ``X_a Y_a chirp(-)``, transforms back with order ``-a`` and applies
    ``C / A`` so the result is comparable with :func:`frconv_time`.
    """
    x, y = _compatible(x, y)
    order = _admissible(order)
    cot, _ = order.cot_csc()
    down = chirp_weight(x.n, order, -1).samples
    prod = frft(x, order).samples * frft(y, order).samples * down
    back = frft(x.replace(prod), -order).samples
    scale = zayed_constant(order) / cmath.sqrt(1 - 1j * cot)
    return x.replace(scale * back)
