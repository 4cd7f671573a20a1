"""Synthetic seismic scene: composite Ricker wavelet, sparse reflectivity, trace."""
from __future__ import annotations

import hashlib
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np
import scipy.signal

from .errors import AliasingError, IncompatibleSignalsError, InfeasibleConfigError, InvalidSignalError
from .frconv import circconv, frconv_time
from .signal import Signal, SignalLike, as_signal, centered_indices


@dataclass(frozen=True)
class RickerSpec:
    peak_freq: float
    amplitude: float = 1.0
    phase_deg: float = 0.0


@dataclass(frozen=True)
class ReflectivitySpec:
    n_spikes: int = 12
    amplitude_range: tuple[float, float] = (0.2, 1.0)
    min_spacing: int = 8
    seed: int = 42

    def __post_init__(self):
        lo, hi = self.amplitude_range
        object.__setattr__(self, "amplitude_range", (float(lo), float(hi)))


@dataclass(frozen=True)
class SynthConfig:
    """Scene parameters. The defaults describe a typical seismic band."""

    n: int = 512
    dt: float = 0.004
    ricker1: RickerSpec = field(default_factory=lambda: RickerSpec(25.0, 1.0, 0.0))
    ricker2: RickerSpec = field(default_factory=lambda: RickerSpec(40.0, 0.6, 45.0))
    reflectivity: ReflectivitySpec = field(default_factory=ReflectivitySpec)
    trace_mode: str = "ordinary"
    trace_order: float = 1.0

    def validate(self) -> None:
        if self.n < 2:
            raise InfeasibleConfigError(f"n must be >= 2, got {self.n}")
        if not (math.isfinite(self.dt) and self.dt > 0):
            raise InfeasibleConfigError(f"dt must be positive, got {self.dt}")
        nyq = 0.5 / self.dt
        for name, rk in (("ricker1", self.ricker1), ("ricker2", self.ricker2)):
            if not (0 < rk.peak_freq < nyq):
                raise AliasingError(f"{name}.peak_freq={rk.peak_freq} Hz must lie in (0, {nyq}) Hz")
        refl = self.reflectivity
        lo, hi = refl.amplitude_range
        if refl.n_spikes < 1 or refl.min_spacing < 1:
            raise InfeasibleConfigError("n_spikes and min_spacing must be >= 1")
        if not (0 <= lo <= hi):
            raise InfeasibleConfigError(f"amplitude_range must satisfy 0 <= lo <= hi, got {refl.amplitude_range}")
        if (refl.n_spikes - 1) * refl.min_spacing + 1 > self.n:
            raise InfeasibleConfigError(
                f"cannot place {refl.n_spikes} spikes {refl.min_spacing} samples apart in {self.n} samples"
            )
        if self.trace_mode not in ("ordinary", "fractional"):
            raise InfeasibleConfigError(f"trace_mode must be 'ordinary' or 'fractional', got {self.trace_mode!r}")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["reflectivity"]["amplitude_range"] = list(d["reflectivity"]["amplitude_range"])
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SynthConfig":
        d = dict(d)
        for key in ("ricker1", "ricker2"):
            if key in d and isinstance(d[key], dict):
                d[key] = RickerSpec(**d[key])
        if "reflectivity" in d and isinstance(d["reflectivity"], dict):
            d["reflectivity"] = ReflectivitySpec(**d["reflectivity"])
        return cls(**d)

    def digest(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()


def ricker(peak_freq: float, n: int, dt: float) -> Signal:
    """Ricker wavelet ``(1 - 2 pi^2 f^2 t^2) exp(-pi^2 f^2 t^2)`` centered at ``t = 0``."""
    nyq = 0.5 / dt
    if not (0 < peak_freq < nyq):
        raise AliasingError(f"peak frequency {peak_freq} Hz must lie in (0, {nyq}) Hz")
    t = centered_indices(n) * dt
    arg = (math.pi * peak_freq * t) ** 2
    return Signal((1.0 - 2.0 * arg) * np.exp(-arg), dt)


def _require_real(x: Signal, what: str) -> None:
    if not x.is_real(tol=1e-12):
        raise InvalidSignalError(f"{what} requires a real-valued signal")


def hilbert_analytic(x: SignalLike) -> Signal:
    """Analytic signal by the FFT method (DC and Nyquist bins kept, negatives zeroed)."""
    x = as_signal(x)
    _require_real(x, "hilbert_analytic")
    # a frequency-domain mask commutes with the circular shift to centered indexing
    return x.replace(scipy.signal.hilbert(x.samples.real))


def phase_rotate(x: SignalLike, theta_deg: float) -> Signal:
    """Constant-phase rotation ``cos(theta) x - sin(theta) H{x}``."""
    x = as_signal(x)
    if theta_deg == 0:
        return x.replace(x.samples.real)
    th = math.radians(theta_deg)
    quad = hilbert_analytic(x).samples.imag
    return x.replace(math.cos(th) * x.samples.real - math.sin(th) * quad)


def composite_wavelet(cfg: SynthConfig) -> Signal:
    """Sum of two amplitude-scaled, phase-rotated Rickers."""
    cfg.validate()
    out = np.zeros(cfg.n)
    for rk in (cfg.ricker1, cfg.ricker2):
        if rk.amplitude == 0:
            continue
        out = out + rk.amplitude * phase_rotate(ricker(rk.peak_freq, cfg.n, cfg.dt), rk.phase_deg).samples.real
    return Signal(out, cfg.dt)


def reflectivity_series(cfg: SynthConfig) -> Signal:
    """Sparse spike train, a pure function of the config (including seed).

    Positions are uniform over all placements respecting ``min_spacing``:
    choose ``k`` slots out of ``n - (k - 1)(s - 1)`` and spread them.
    """
    cfg.validate()
    refl = cfg.reflectivity
    k, s = refl.n_spikes, refl.min_spacing
    slots = cfg.n - (k - 1) * (s - 1)
    if slots < k:
        raise InfeasibleConfigError(f"cannot place {k} spikes {s} samples apart in {cfg.n} samples")
    rng = np.random.default_rng(refl.seed)
    pos = np.sort(rng.choice(slots, size=k, replace=False)) + np.arange(k) * (s - 1)
    lo, hi = refl.amplitude_range
    amp = rng.uniform(lo, hi, size=k) * rng.choice([-1.0, 1.0], size=k)
    out = np.zeros(cfg.n)
    out[pos] = amp
    return Signal(out, cfg.dt)


def pad_centered(x: SignalLike, length: int) -> Signal:
    """Zero-pad so every centered index keeps its position."""
    x = as_signal(x)
    if length < x.n:
        raise ValueError(f"cannot pad length {x.n} down to {length}")
    out = np.zeros(length, dtype=np.complex128)
    start = length // 2 - x.n // 2
    out[start : start + x.n] = x.samples
    return x.replace(out)


def crop_centered(x: SignalLike, length: int) -> Signal:
    x = as_signal(x)
    if length > x.n:
        raise ValueError(f"cannot crop length {x.n} up to {length}")
    start = x.n // 2 - length // 2
    return x.replace(x.samples[start : start + length])


def padded_length(nw: int, nr: int) -> int:
    return 1 << (nw + nr - 2).bit_length()


def build_trace(w: SignalLike, r: SignalLike, mode: str = "ordinary", order: Optional[float] = None) -> Signal:
    """Convolve wavelet and reflectivity on a zero-padded power-of-two grid.

    The padded length is at least ``len(w) + len(r) - 1``, so circular
    convolution equals linear convolution. ``mode="fractional"`` uses the
    fractional convolution at ``order`` instead.
    """
    w, r = as_signal(w), as_signal(r)
    if w.dt != r.dt:
        raise IncompatibleSignalsError(f"dt mismatch: {w.dt} vs {r.dt}")
    size = padded_length(w.n, r.n)
    wp, rp = pad_centered(w, size), pad_centered(r, size)
    if mode == "ordinary":
        return circconv(wp, rp)
    if mode == "fractional":
        if order is None:
            raise ValueError("fractional trace mode needs an order")
        return frconv_time(wp, rp, order)
    raise ValueError(f"mode must be 'ordinary' or 'fractional', got {mode!r}")


@dataclass(frozen=True, eq=False)
class Scene:
    config: SynthConfig
    wavelet: Signal
    reflectivity: Signal
    trace_full: Signal

    @property
    def trace(self) -> Signal:
        """Trace on the original ``n``-sample window."""
        return crop_centered(self.trace_full, self.config.n)

    def padded(self) -> tuple[Signal, Signal]:
        """Wavelet and reflectivity on the trace's padded grid."""
        size = self.trace_full.n
        return pad_centered(self.wavelet, size), pad_centered(self.reflectivity, size)


def make_scene(cfg: Optional[SynthConfig] = None) -> Scene:
    cfg = cfg or SynthConfig()
    cfg.validate()
    w = composite_wavelet(cfg)
    r = reflectivity_series(cfg)
    order = cfg.trace_order if cfg.trace_mode == "fractional" else None
    return Scene(cfg, w, r, build_trace(w, r, cfg.trace_mode, order))
