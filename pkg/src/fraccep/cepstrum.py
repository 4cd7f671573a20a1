"""Real cepstrum (FT chain) and real fractional cepstrum (FRFT chain).

FT chain:    s -> DFT -> ln|.| -> inverse DFT
FRFT chain:  s -> F_a -> ln|.| -> F_{-a}   (or F_{+a} with back="forward")

Phase is discarded in both chains, so the unit-magnitude chirp that the
fractional product theorem attaches to ``W_a R_a`` contributes ``ln 1 = 0``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import DegenerateSpectrumError
from .frconv import circconv, frconv_time
from .frft import frft, frft_integer
from .signal import FrftOrder, OrderLike, Signal, SignalLike, as_order, as_signal

DEFAULT_FLOOR_REL = 1e-10

BackDirection = Literal["inverse", "forward"]
ConvMode = Literal["ordinary", "fractional"]


@dataclass(frozen=True, eq=False)
class Cepstrum:
    """Cepstral sequence; ``real`` is what the usual plots show."""

    values: np.ndarray
    order: FrftOrder
    floor_hits: int
    dt: float = 1.0
    back_direction: str = "inverse"

    @property
    def real(self) -> np.ndarray:
        return self.values.real

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class AdditivityReport:
    """Residual of ``FC(s) - FC(w) - FC(r)`` after removing the constant offset.

    ``offset`` is the removed coefficient along ``back(ones)``; with fractional
    convolution it equals ``ln(1 / sqrt(2 pi))`` up to rounding.
    """

    order: float
    residual_l2: float
    residual_linf: float
    relative_residual: float
    conv_mode: str
    floor_hits: int = 0
    offset: complex = 0j


@dataclass(frozen=True, eq=False)
class AdditivityCurves:
    report: AdditivityReport
    trace: Cepstrum
    wavelet: Cepstrum
    reflectivity: Cepstrum
    residual: np.ndarray = field(repr=False)

    @property
    def summed(self) -> np.ndarray:
        """``FC(w) + FC(r)``: the red curve; ``trace.values`` is the blue one."""
        return self.wavelet.values + self.reflectivity.values


def log_magnitude(spectrum: SignalLike, floor_rel: float = DEFAULT_FLOOR_REL) -> tuple[np.ndarray, int]:
    """``ln(max(|S|, floor_rel * max|S|))`` and the number of clamped bins."""
    if not (0.0 < floor_rel < 1.0):
        raise ValueError(f"floor_rel must lie in (0, 1), got {floor_rel!r}")
    mag = np.abs(as_signal(spectrum).samples)
    peak = mag.max()
    if peak == 0.0:
        raise DegenerateSpectrumError("spectrum is identically zero")
    floor = floor_rel * peak
    hits = int(np.count_nonzero(mag < floor))
    return np.log(np.maximum(mag, floor)), hits


def real_cepstrum_ft(s: SignalLike, floor_rel: float = DEFAULT_FLOOR_REL) -> Cepstrum:
    """Classical real cepstrum with centered unitary DFTs."""
    s = as_signal(s)
    logmag, hits = log_magnitude(frft_integer(s, 1), floor_rel)
    values = frft_integer(s.replace(logmag), 3).samples
    return Cepstrum(values, FrftOrder(1.0), hits, s.dt)


def _back_order(order: FrftOrder, back_direction: str) -> FrftOrder:
    if back_direction == "inverse":
        return -order
    if back_direction == "forward":
        return order
    raise ValueError(f"back_direction must be 'inverse' or 'forward', got {back_direction!r}")


def real_frft_cepstrum(
    s: SignalLike,
    order: OrderLike,
    floor_rel: float = DEFAULT_FLOOR_REL,
    back_direction: BackDirection = "inverse",
) -> Cepstrum:
    """Real fractional cepstrum at order ``a``.

    ``back_direction="inverse"`` transforms the log magnitude with order
    ``-a``, which reproduces :func:`real_cepstrum_ft` at ``a = 1``;
    ``"forward"`` uses ``+a`` throughout.
    """
    s = as_signal(s)
    order = as_order(order)
    back = _back_order(order, back_direction)
    logmag, hits = log_magnitude(frft(s, order), floor_rel)
    values = frft(s.replace(logmag), back).samples
    return Cepstrum(values, order, hits, s.dt, back_direction)


def offset_direction(n: int, order: OrderLike, back_direction: BackDirection = "inverse") -> np.ndarray:
    """Where a constant log-spectral offset lands after the back transform.

    At ``a = 1`` this is a spike at zero quefrency; at other orders the back
    transform spreads a constant into a chirp.
    """
    back = _back_order(as_order(order), back_direction)
    return frft(np.ones(n, dtype=np.complex128), back).samples


def additivity_curves(
    w: SignalLike,
    r: SignalLike,
    order: OrderLike,
    conv_mode: ConvMode = "fractional",
    floor_rel: float = DEFAULT_FLOOR_REL,
    back_direction: BackDirection = "inverse",
) -> AdditivityCurves:
    """Convolve ``w`` and ``r`` and compare ``FC(s)`` with ``FC(w) + FC(r)``."""
    w, r = as_signal(w), as_signal(r)
    order = as_order(order)
    if conv_mode == "fractional":
        s = frconv_time(w, r, order)
    elif conv_mode == "ordinary":
        s = circconv(w, r)
    else:
        raise ValueError(f"conv_mode must be 'ordinary' or 'fractional', got {conv_mode!r}")

    fc_s = real_frft_cepstrum(s, order, floor_rel, back_direction)
    fc_w = real_frft_cepstrum(w, order, floor_rel, back_direction)
    fc_r = real_frft_cepstrum(r, order, floor_rel, back_direction)
    diff = fc_s.values - fc_w.values - fc_r.values

    # multiplicative constants (zayed_constant, grid factors) add the same
    # ln|c| to every log-magnitude bin; project that direction out
    e = offset_direction(s.n, order, back_direction)
    offset = np.vdot(e, diff) / np.vdot(e, e)
    residual = diff - offset * e

    ref = np.linalg.norm(fc_s.values)
    l2 = float(np.linalg.norm(residual))
    report = AdditivityReport(
        order=order.a,
        residual_l2=l2,
        residual_linf=float(np.max(np.abs(residual))),
        relative_residual=l2 / ref if ref > 0 else math.inf,
        conv_mode=conv_mode,
        floor_hits=fc_s.floor_hits + fc_w.floor_hits + fc_r.floor_hits,
        offset=complex(offset),
    )
    return AdditivityCurves(report, fc_s, fc_w, fc_r, residual)


def fc_additivity(
    w: SignalLike,
    r: SignalLike,
    order: OrderLike,
    conv_mode: ConvMode = "fractional",
    floor_rel: float = DEFAULT_FLOOR_REL,
    back_direction: BackDirection = "inverse",
) -> AdditivityReport:
    return additivity_curves(w, r, order, conv_mode, floor_rel, back_direction).report
