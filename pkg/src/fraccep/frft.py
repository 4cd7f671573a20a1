"""Discrete fractional Fourier transform on the centered dimensionless grid.

Three evaluation routes share one sampled kernel::

    K[m, n] = sqrt(1 - j cot(phi)) / sqrt(N)
              * exp(j pi (cot(phi) (m^2 + n^2) - 2 csc(phi) m n) / N)

with centered integer indices ``m, n`` and ``phi = a pi / 2``.  At ``a = 1`` the
kernel is the centered unitary DFT.

* :func:`frft_direct` builds ``K`` explicitly (O(N^2)); it is the oracle.
* :func:`frft_fast` evaluates the same kernel as chirp multiply, chirp
  convolution (zero-padded FFT) and chirp multiply (O(N log N)).
* :func:`frft_integer` handles the exact branches ``a = 0, 1, 2, 3``.

:func:`frft` is the public entry point and dispatches between them.
"""
from __future__ import annotations

import math

import numpy as np
from scipy.fft import next_fast_len

from .errors import SingularOrderError
from .signal import (
    FrftOrder,
    OrderLike,
    Signal,
    SignalLike,
    as_order,
    as_signal,
    centered_indices,
)

#: orders with |reduced| < SPLIT_MARGIN or > 2 - SPLIT_MARGIN are evaluated as F_{a-1} F_1
SPLIT_MARGIN = 0.5


def centered_dft(x: np.ndarray) -> np.ndarray:
    """Unitary DFT with both axes indexed from ``-N//2``."""
    return np.fft.fftshift(np.fft.fft(np.fft.ifftshift(x), norm="ortho"))


def centered_idft(x: np.ndarray) -> np.ndarray:
    return np.fft.fftshift(np.fft.ifft(np.fft.ifftshift(x), norm="ortho"))


def centered_reversal(x: np.ndarray) -> np.ndarray:
    """``y[m] = x[-m]`` in centered coordinates, wrapping modulo N.

    For even N the sample at ``m = -N/2`` maps onto itself.
    """
    n = x.size
    c = n // 2
    return x[(2 * c - np.arange(n)) % n]


def frft_integer(x: SignalLike, k: int) -> Signal:
    """Exact transform at integer order ``k`` (taken mod 4)."""
    x = as_signal(x)
    k = int(k) % 4
    if k == 0:
        return x
    if k == 1:
        return x.replace(centered_dft(x.samples))
    if k == 2:
        return x.replace(centered_reversal(x.samples))
    return x.replace(centered_idft(x.samples))


def _chirp_params(order: FrftOrder) -> tuple[float, float, complex]:
    try:
        cot, csc = order.cot_csc()
    except SingularOrderError:
        raise SingularOrderError(
            f"order {order.a} is an identity/reversal branch; use frft_integer"
        ) from None
    return cot, csc, complex(np.sqrt(1 - 1j * cot))


def frft_kernel(n: int, order: OrderLike) -> np.ndarray:
    """The sampled ``n x n`` kernel matrix (rows index the output)."""
    cot, csc, amp = _chirp_params(as_order(order))
    m = centered_indices(n).astype(float)
    phase = cot * (m[:, None] ** 2 + m[None, :] ** 2) - 2.0 * csc * np.outer(m, m)
    return (amp / math.sqrt(n)) * np.exp(1j * math.pi * phase / n)


def frft_direct(x: SignalLike, order: OrderLike) -> Signal:
    """Matrix-vector evaluation of the sampled kernel (reference path)."""
    x = as_signal(x)
    k = frft_kernel(x.n, order)
    return x.replace(k @ x.samples)


def frft_fast(x: SignalLike, order: OrderLike) -> Signal:
    """O(N log N) evaluation of the sampled kernel.

    Uses ``-2 m n = (m - n)^2 - m^2 - n^2`` so that::

        y[m] = A/sqrt(N) c[m] sum_n exp(j pi csc (m - n)^2 / N) c[n] x[n]

    with ``c[n] = exp(-j pi tan(phi/2) n^2 / N)``.  The sum is a linear
    convolution evaluated with an FFT of length >= 2N - 1, so the result
    matches :func:`frft_direct` to rounding.
    """
    x = as_signal(x)
    order = as_order(order)
    cot, csc, amp = _chirp_params(order)
    n = x.n
    m = centered_indices(n).astype(float)
    # cot - csc == -tan(phi/2), but the subtraction cancels badly near phi = 0
    k = order.integer_branch
    if k == 1:
        rate = -1.0
    elif k == 3:
        rate = 1.0
    else:
        rate = -math.tan(order.angle / 2)
    outer = np.exp(1j * math.pi * rate * m**2 / n)
    lags = np.arange(-(n - 1), n, dtype=float)
    h = np.exp(1j * math.pi * csc * lags**2 / n)

    size = next_fast_len(2 * n - 1)
    g = outer * x.samples
    conv = np.fft.ifft(np.fft.fft(g, size) * np.fft.fft(h, size))
    # output m (array index i) pairs with lag offset n - 1
    y = conv[n - 1 : 2 * n - 1]
    return x.replace((amp / math.sqrt(n)) * outer * y)


def frft(x: SignalLike, order: OrderLike) -> Signal:
    """Fractional Fourier transform of order ``a`` (``a = 1`` is the DFT).

    Parameters
    ----------
    x : Signal or array_like
        Input on the centered grid. Arrays get ``dt = 1``.
    order : float or FrftOrder
        Fractional order; reduced modulo 4 before anything else.

    Returns
    -------
    Signal
        Transformed samples, carrying the input ``dt``.

    Notes
    -----
    Orders within ``EPS_ORDER`` of an integer use the exact branches.
    Orders whose reduced value lies outside ``0.5 <= |a| <= 1.5`` are
    computed as ``F_{a-1}(F_1 x)``; the sampled chirp kernel aliases a
    ghost copy of the signal into the grid when ``|csc phi| > 2``.
    """
    x = as_signal(x)
    order = as_order(order)
    k = order.integer_branch
    if k is not None:
        return frft_integer(x, k)
    r = order.reduced
    if abs(r) < SPLIT_MARGIN or abs(r) > 2.0 - SPLIT_MARGIN:
        return frft(frft_integer(x, 1), FrftOrder(r - 1.0))
    return frft_fast(x, FrftOrder(r))
