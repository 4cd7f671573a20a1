import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from fraccep.cepstrum import AdditivityReport
from fraccep.config import dump_config, load_config, parse_config
from fraccep.errors import ConfigError, FormatError
from fraccep.io import (
    RAW_MAGIC,
    fc_paths,
    raw_bytes,
    raw_from_bytes,
    read_fc_matrix,
    read_signal,
    reports_from_csv,
    reports_to_csv,
    signal_from_csv,
    signal_to_csv,
    write_fc_matrix,
    write_signal,
)
from fraccep.signal import Signal
from fraccep.sweep import FcMatrix, RunConfig
from fraccep.synth import RickerSpec, SynthConfig

finite = st.floats(-1e6, 1e6, allow_nan=False)


@settings(max_examples=50, deadline=None)
@given(arrays(np.complex128, st.integers(2, 40), elements=st.complex_numbers(max_magnitude=1e6, allow_nan=False)),
       st.sampled_from([1.0, 0.004, 0.1, 3.0]))
def test_signal_csv_roundtrip(x, dt):
    s = Signal(x, dt)
    back = signal_from_csv(signal_to_csv(s))
    assert back.dt == pytest.approx(dt, rel=1e-15)
    np.testing.assert_allclose(back.samples, s.samples, atol=1e-12, rtol=0)


@pytest.mark.parametrize("fmt", ["csv", "raw"])
def test_signal_file_roundtrip(tmp_path, rng, fmt):
    s = Signal(rng.standard_normal(33) + 1j * rng.standard_normal(33), 0.004)
    path = tmp_path / "x.dat"
    write_signal(s, path, fmt)
    back = read_signal(path, dt=0.004)
    assert back == s


def test_signal_csv_errors():
    good = signal_to_csv(Signal(np.arange(4.0), 0.5))
    with pytest.raises(FormatError, match="line 1"):
        signal_from_csv("a,b,c\n0,0,0\n")
    lines = good.splitlines()
    lines[3] = "2,0.5,abc,0"
    with pytest.raises(FormatError, match="line 4"):
        signal_from_csv("\n".join(lines))
    lines = good.splitlines()
    lines[4] = "3,0.9,1,0"
    with pytest.raises(FormatError, match="line 5"):
        signal_from_csv("\n".join(lines))
    with pytest.raises(FormatError, match="line 2"):
        signal_from_csv(good.splitlines()[0] + "\n0,1,2\n")
    with pytest.raises(FormatError, match="at least 2"):
        signal_from_csv("index,t,re,im\n0,0,1,0\n")


@settings(max_examples=30, deadline=None)
@given(arrays(np.complex128, st.tuples(st.integers(1, 5), st.integers(1, 20)),
              elements=st.complex_numbers(allow_nan=False, allow_infinity=False)))
def test_raw_roundtrip_exact(values):
    assert np.array_equal(raw_from_bytes(raw_bytes(values)), values)


def test_raw_layout():
    blob = raw_bytes(np.array([[1 + 2j]]))
    assert blob[:8] == RAW_MAGIC
    assert len(blob) == 16 + 16
    assert blob[8:16] == (1).to_bytes(4, "little") * 2


def test_raw_errors():
    blob = raw_bytes(np.ones((2, 3)))
    with pytest.raises(FormatError, match="byte offset 0"):
        raw_from_bytes(b"NOTMAGIC" + blob[8:])
    with pytest.raises(FormatError, match="byte offset 16"):
        raw_from_bytes(blob[:-5])
    with pytest.raises(FormatError, match="truncated header"):
        raw_from_bytes(blob[:10])


@pytest.mark.parametrize("fmt", ["csv", "raw"])
def test_fc_matrix_roundtrip(tmp_path, rng, fmt):
    values = rng.standard_normal((41, 16)) + 1j * rng.standard_normal((41, 16))
    orders = np.round(0.8 + 0.01 * np.arange(41), 12)
    m = FcMatrix(orders, values, {"floor_rel": 1e-10})
    paths = write_fc_matrix(m, tmp_path / "fc", fmt)
    assert all(p.exists() for p in paths.values())
    back = read_fc_matrix(paths["data"])
    assert back.shape == (41, 16)
    np.testing.assert_array_equal(back.orders, orders)
    np.testing.assert_allclose(back.values, values, atol=1e-12)
    assert back.metadata["floor_rel"] == 1e-10
    assert "created" not in back.metadata
    meta = json.loads(paths["meta"].read_text())
    assert meta["rows"] == 41 and meta["format"] == fmt and "created" in meta


def test_fc_paths():
    assert fc_paths("out/fc")["data"].name == "fc.csv"
    assert fc_paths("out/fc.csv")["imag"].name == "fc.imag.csv"
    assert fc_paths("fc", "raw")["data"].name == "fc.bin"


def test_fc_matrix_bad_header(tmp_path):
    m = FcMatrix([1.0], np.ones((1, 4)))
    paths = write_fc_matrix(m, tmp_path / "fc")
    text = paths["data"].read_text().splitlines()
    paths["data"].write_text("\n".join(["order,0,1,2,3"] + text[1:]))
    with pytest.raises(FormatError, match="line 1"):
        read_fc_matrix(paths["data"])
    paths["data"].write_text("\n".join([text[0], "1.0,1,2"]))
    with pytest.raises(FormatError, match="line 2"):
        read_fc_matrix(paths["data"])


def test_report_roundtrip():
    reps = [
        AdditivityReport(0.9, 1e-12, 2e-13, 3e-14, "fractional", 0, complex(-0.91, 0.01)),
        AdditivityReport(1.15, 0.5, 0.1, 1e-3, "ordinary", 2, 0j),
    ]
    assert reports_from_csv(reports_to_csv(reps)) == reps
    with pytest.raises(FormatError, match="line 1"):
        reports_from_csv("order\n")


def test_config_roundtrip(tmp_path):
    cfg = RunConfig(
        scene=SynthConfig(n=256, ricker2=RickerSpec(35.0, 0.5, 30.0)),
        orders=(0.9, 1.0),
        floor_rel=1e-8,
        workers=3,
    )
    assert parse_config(dump_config(cfg)) == cfg
    path = tmp_path / "run.cfg"
    path.write_text(dump_config(RunConfig()))
    assert load_config(path) == RunConfig()


def test_config_partial():
    cfg = parse_config("[scene.reflectivity]\nseed = 7\n[run]\norders = 0.9, 1.1\n")
    assert cfg.scene.reflectivity.seed == 7
    assert cfg.orders == (0.9, 1.1)
    assert cfg.scene.ricker1 == SynthConfig().ricker1


@pytest.mark.parametrize(
    "text, match",
    [
        ("[run]\nbogus = 1\n", "unknown key"),
        ("[elsewhere]\nx = 1\n", "unknown section"),
        ("[scene]\nn = many\n", "n"),
        ("[run]\nfloor_rel = 5\n", "floor_rel"),
        ("no section header\n", "<string>"),
    ],
)
def test_config_errors(text, match):
    with pytest.raises(ConfigError, match=match):
        parse_config(text)


def test_config_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="nope.cfg"):
        load_config(tmp_path / "nope.cfg")
