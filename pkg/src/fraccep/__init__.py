"""Fractional Fourier transform, fractional convolution and fractional cepstrum."""

__version__ = "0.1.0"

from .cepstrum import (
    AdditivityCurves,
    AdditivityReport,
    Cepstrum,
    additivity_curves,
    fc_additivity,
    log_magnitude,
    real_cepstrum_ft,
    real_frft_cepstrum,
)
from .errors import FraccepError
from .frconv import chirp_weight, circconv, frconv_spectral, frconv_time
from .frft import centered_dft, centered_idft, frft, frft_direct, frft_fast, frft_integer
from .signal import FrftOrder, Signal, dimensionless_grid
from .sweep import FcMatrix, RunConfig, additivity_scan, alpha_sweep
from .synth import (
    SynthConfig,
    build_trace,
    composite_wavelet,
    hilbert_analytic,
    make_scene,
    phase_rotate,
    reflectivity_series,
    ricker,
)

__all__ = [
    "AdditivityCurves",
    "AdditivityReport",
    "Cepstrum",
    "FcMatrix",
    "FraccepError",
    "FrftOrder",
    "RunConfig",
    "Signal",
    "SynthConfig",
    "additivity_curves",
    "additivity_scan",
    "alpha_sweep",
    "build_trace",
    "centered_dft",
    "centered_idft",
    "chirp_weight",
    "circconv",
    "composite_wavelet",
    "dimensionless_grid",
    "fc_additivity",
    "frconv_spectral",
    "frconv_time",
    "frft",
    "frft_direct",
    "frft_fast",
    "frft_integer",
    "hilbert_analytic",
    "log_magnitude",
    "make_scene",
    "phase_rotate",
    "real_cepstrum_ft",
    "real_frft_cepstrum",
    "reflectivity_series",
    "ricker",
]
