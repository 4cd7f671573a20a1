"""Acceptance suite: one test per criterion, each recording a PASS/FAIL line.

The lines are printed in the "acceptance criteria" section of the pytest
terminal summary. Tolerances are the contractual ones and are not relaxed.
"""
import math

import numpy as np
import pytest

from fraccep.cepstrum import fc_additivity, log_magnitude, real_cepstrum_ft
from fraccep.errors import FormatError
from fraccep.frconv import chirp_weight, frconv_spectral, frconv_time
from fraccep.frft import centered_dft, frft, frft_direct, frft_fast
from fraccep.io import raw_bytes, raw_from_bytes, read_fc_matrix, signal_from_csv, signal_to_csv, write_fc_matrix
from fraccep.signal import Signal, dimensionless_grid
from fraccep.sweep import ADDITIVITY_ORDERS, alpha_sweep
from fraccep.synth import SynthConfig, make_scene

from conftest import ACCEPTANCE_LINES, gaussian_pulse, rel_l2

SEED = 20240611


def record(k: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} criterion {k:2d}: {detail}")


def random_complex(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


@pytest.fixture(scope="module")
def scene():
    return make_scene(SynthConfig())


def test_c01_ft_reduction():
    rng = np.random.default_rng(SEED)
    worst = max(rel_l2(frft(x, 1.0).samples, centered_dft(x)) for x in (random_complex(rng, 256) for _ in range(50)))
    ok = worst <= 1e-10
    record(1, ok, f"frft(x, 1) vs centered unitary DFT, 50 signals N=256: max rel L2 {worst:.2e} (<= 1e-10)")
    assert ok


def _fast_direct_sweep():
    rng = np.random.default_rng(SEED + 1)
    for n in (128, 256):
        for a in (0.5, 0.75, 0.9, 1.25):
            x = random_complex(rng, n)
            yield n, a, x, frft_fast(x, a).samples, frft_direct(x, a).samples


def test_c02_fast_vs_direct():
    worst = max(rel_l2(fast, direct) for *_, fast, direct in _fast_direct_sweep())
    ok = worst <= 1e-6
    record(2, ok, f"frft_fast vs frft_direct, N in (128, 256), a in (0.5, 0.75, 0.9, 1.25): max rel L2 {worst:.2e} (<= 1e-6)")
    assert ok


def test_c03_unitarity():
    worst, where = 0.0, None
    for n, a, x, fast, _ in _fast_direct_sweep():
        err = abs(np.linalg.norm(fast) ** 2 / np.linalg.norm(x) ** 2 - 1)
        if err > worst:
            worst, where = err, (n, a)
    ok = worst <= 1e-6
    record(3, ok, f"energy preservation on the criterion-2 inputs: max rel error {worst:.2e} at N={where[0]}, a={where[1]} (<= 1e-6)")
    # informational: the same transforms on time-frequency-concentrated pulses
    pulse_err = max(
        abs(np.linalg.norm(frft(gaussian_pulse(n, 0.3, 1.0, 0.4), a).samples) / np.linalg.norm(gaussian_pulse(n, 0.3, 1.0, 0.4)) - 1)
        for n in (128, 256)
        for a in (0.5, 0.75, 0.9, 1.25)
    )
    ACCEPTANCE_LINES.append(f"  info criterion  3: concentrated pulses keep their norm to {pulse_err:.1e}")
    assert ok


def test_c04_index_additivity_and_inverse():
    n = 512
    pulses = [gaussian_pulse(n, 0.0, 1.0), gaussian_pulse(n, 0.6, 0.8, 0.5), gaussian_pulse(n, -0.9, 1.3, -0.7)]
    add = max(np.linalg.norm(frft(frft(x, 0.3), 0.4).samples - frft(x, 0.7).samples) / np.linalg.norm(x) for x in pulses)
    inv = max(
        np.linalg.norm(frft(frft(x, a), -a).samples - x) / np.linalg.norm(x)
        for x in pulses
        for a in (0.3, 0.7, 0.9, 1.15, 1.6)
    )
    ok = add <= 1e-2 and inv <= 1e-2
    record(4, ok, f"index additivity {add:.2e}, inverse {inv:.2e}, Gaussian pulses N=512 (<= 1e-2)")
    assert ok


def test_c05_gaussian_eigenfunction():
    g = np.exp(-np.pi * dimensionless_grid(256) ** 2)
    errs = {a: rel_l2(frft(g, a).samples, g) for a in (0.3, 0.7, 1.4)}
    worst = max(errs.values())
    ok = worst <= 1e-3
    record(5, ok, f"exp(-pi u^2) invariance at a in (0.3, 0.7, 1.4), N=256: max rel L2 {worst:.2e} (<= 1e-3)")
    assert ok


def test_c06_product_theorem():
    n = 512
    x, y = gaussian_pulse(n, 0.5, 1.2, 0.5), gaussian_pulse(n, -0.7, 0.9)
    frac = max(rel_l2(frconv_spectral(x, y, a).samples, frconv_time(x, y, a).samples) for a in (0.9, 1.15))
    one = rel_l2(frconv_spectral(x, y, 1.0).samples, frconv_time(x, y, 1.0).samples)
    ok = frac <= 1e-2 and one <= 1e-10
    record(6, ok, f"spectral vs time fractional convolution: a in (0.9, 1.15) {frac:.2e} (<= 1e-2), a=1 {one:.2e} (<= 1e-10)")
    assert ok


def test_c07_chirp_neutrality():
    n = 512
    x, y = gaussian_pulse(n, 0.5, 1.2, 0.5), gaussian_pulse(n, -0.7, 0.9)
    worst = 0.0
    for a in (0.9, 0.95, 0.99, 1.15, 0.5, 1.5):
        prod = frft(x, a).samples * frft(y, a).samples
        plain, _ = log_magnitude(prod)
        chirped, _ = log_magnitude(prod * chirp_weight(n, a, -1).samples)
        worst = max(worst, float(np.max(np.abs(chirped - plain))))
    ok = worst <= 1e-12
    record(7, ok, f"log-magnitude change from the chirp factor: max {worst:.2e} per bin (<= 1e-12)")
    assert ok


def test_c08_classical_additivity(scene):
    w, r = scene.padded()
    rep = fc_additivity(w, r, 1.0, "fractional")
    ok = rep.floor_hits == 0 and rep.relative_residual <= 1e-8
    record(8, ok, f"default scene, a=1: rel residual {rep.relative_residual:.2e} (<= 1e-8), floor hits {rep.floor_hits} (== 0)")
    assert ok


def test_c09_fc_additivity(scene):
    w, r = scene.padded()
    reps = [fc_additivity(w, r, a, "fractional") for a in ADDITIVITY_ORDERS]
    worst = max(rep.relative_residual for rep in reps)
    ok = worst <= 1e-2
    detail = ", ".join(f"{rep.order:g}: {rep.relative_residual:.1e}" for rep in reps)
    record(9, ok, f"FC additivity at {detail} (<= 1e-2)")
    assert ok


def test_c10_multidomain_distinctness(scene):
    m = alpha_sweep(scene.trace, [0.9, 1.0, 1.1])
    rows = {a: m.row(a) for a in (0.9, 1.0, 1.1)}
    pair = min(rel_l2(rows[a], rows[b]) for a, b in ((0.9, 1.0), (1.0, 1.1), (0.9, 1.1)))
    same = float(np.max(np.abs(rows[1.0] - real_cepstrum_ft(scene.trace).values)))
    ok = pair > 1e-6 and same <= 1e-12
    record(10, ok, f"rows at 0.9/1.0/1.1 differ by >= {pair:.2e} (> 1e-6); a=1 row vs ordinary cepstrum {same:.1e} (<= 1e-12)")
    assert ok


def test_c11_chirp_concentration():
    n = 512
    u = dimensionless_grid(n)
    worst = 1.0
    for a in (0.6, 0.8, 0.9, 1.2, 1.4):
        rate = -1 / math.tan(a * math.pi / 2)
        power = np.abs(frft(np.exp(1j * math.pi * rate * u**2), a).samples) ** 2
        k = int(np.argmax(power))
        worst = min(worst, power[max(k - 5, 0) : k + 6].sum() / power.sum())
    ok = worst >= 0.5
    record(11, ok, f"matched-rate chirp, N=512: min energy fraction within 5 bins of peak {worst:.3f} (>= 0.5)")
    assert ok


def test_c12_determinism_and_io(tmp_path):
    cfg = SynthConfig()
    a, b = make_scene(cfg), make_scene(cfg)
    same_scene = all(
        signal_to_csv(x).encode() == signal_to_csv(y).encode()
        for x, y in ((a.wavelet, b.wavelet), (a.reflectivity, b.reflectivity), (a.trace, b.trace))
    )
    payloads = []
    for d in ("one", "two"):
        paths = write_fc_matrix(alpha_sweep(make_scene(cfg).trace, [0.9, 1.0]), tmp_path / d / "fc")
        payloads.append((paths["data"].read_bytes(), paths["imag"].read_bytes()))
    same_sweep = payloads[0] == payloads[1]

    trace_rt = float(np.max(np.abs(signal_from_csv(signal_to_csv(a.trace)).samples - a.trace.samples)))
    m = read_fc_matrix(tmp_path / "one" / "fc")
    ref = alpha_sweep(a.trace, [0.9, 1.0]).values
    matrix_rt = float(np.max(np.abs(m.values - ref)))

    blob = raw_bytes(ref)
    raw_ok = np.array_equal(raw_from_bytes(blob), ref)
    for bad in (b"XXXXXXXX" + blob[8:], blob[:-16], blob[:12]):
        try:
            raw_from_bytes(bad)
            raw_ok = False
        except FormatError:
            pass

    ok = same_scene and same_sweep and trace_rt <= 1e-12 and matrix_rt <= 1e-12 and raw_ok
    record(
        12,
        ok,
        f"byte-identical reruns {same_scene and same_sweep}; CSV round trip {max(trace_rt, matrix_rt):.1e} (<= 1e-12); "
        f"raw magic/shape checks {raw_ok}",
    )
    assert ok
