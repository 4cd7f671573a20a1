"""File formats: signal CSV, cepstrum-matrix CSV + JSON sidecar, raw binary.

Raw layout (little endian)::

    offset 0   8 bytes   magic b"FRCEPS01"
    offset 8   uint32    rows
    offset 12  uint32    cols
    offset 16  float64   rows * cols * 2 values, re/im interleaved, row-major
"""
from __future__ import annotations

import json
import struct
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, Union

import numpy as np

from .cepstrum import AdditivityCurves, AdditivityReport
from .errors import FormatError
from .signal import Signal, centered_indices
from .sweep import FcMatrix

PathLike = Union[str, Path]

RAW_MAGIC = b"FRCEPS01"
_RAW_HEADER = struct.Struct("<8sII")
SIGNAL_HEADER = "index,t,re,im"
TIMESTAMP_KEYS = ("created",)


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _version() -> str:
    from . import __version__

    return __version__


# -- signals -----------------------------------------------------------------


def signal_to_csv(s: Signal) -> str:
    lines = [SIGNAL_HEADER]
    for k, (t, v) in enumerate(zip(s.t, s.samples)):
        lines.append(f"{k},{_fmt(t)},{_fmt(v.real)},{_fmt(v.imag)}")
    return "\n".join(lines) + "\n"


def write_signal_csv(s: Signal, path: PathLike) -> None:
    Path(path).write_text(signal_to_csv(s))


def signal_from_csv(text: str, source: str = "<string>") -> Signal:
    lines = text.splitlines()
    if not lines or lines[0].strip().replace(" ", "") != SIGNAL_HEADER:
        got = lines[0].strip() if lines else ""
        raise FormatError(f"{source}: line 1: expected header {SIGNAL_HEADER!r}, got {got!r}")
    idx, t, re, im = [], [], [], []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 4:
            raise FormatError(f"{source}: line {lineno}: expected 4 fields, got {len(parts)}")
        try:
            idx.append(int(parts[0]))
            t.append(float(parts[1]))
            re.append(float(parts[2]))
            im.append(float(parts[3]))
        except ValueError as exc:
            raise FormatError(f"{source}: line {lineno}: {exc}") from None
    n = len(idx)
    if n < 2:
        raise FormatError(f"{source}: need at least 2 samples, found {n}")
    if idx != list(range(n)):
        raise FormatError(f"{source}: index column must run 0..{n - 1}")
    t = np.array(t)
    # centered index -1 exists for every n >= 2
    dt = -float(t[n // 2 - 1])
    expected = centered_indices(n) * dt
    bad = np.flatnonzero(~np.isclose(t, expected, rtol=1e-9, atol=1e-12 * abs(dt)))
    if bad.size or not dt > 0:
        line = int(bad[0]) + 2 if bad.size else n // 2 + 1
        raise FormatError(f"{source}: line {line}: time column is not a centered uniform grid")
    return Signal(np.array(re) + 1j * np.array(im), dt)


def read_signal_csv(path: PathLike) -> Signal:
    path = Path(path)
    return signal_from_csv(path.read_text(), str(path))


# -- raw ---------------------------------------------------------------------


def raw_bytes(values: np.ndarray) -> bytes:
    values = np.atleast_2d(np.asarray(values, dtype=np.complex128))
    rows, cols = values.shape
    inter = np.empty((rows, cols, 2), dtype="<f8")
    inter[..., 0] = values.real
    inter[..., 1] = values.imag
    return _RAW_HEADER.pack(RAW_MAGIC, rows, cols) + inter.tobytes()


def raw_from_bytes(blob: bytes, source: str = "<bytes>") -> np.ndarray:
    if len(blob) < _RAW_HEADER.size:
        raise FormatError(f"{source}: byte offset {len(blob)}: truncated header ({_RAW_HEADER.size} bytes needed)")
    magic, rows, cols = _RAW_HEADER.unpack_from(blob, 0)
    if magic != RAW_MAGIC:
        raise FormatError(f"{source}: byte offset 0: bad magic {magic!r}, expected {RAW_MAGIC!r}")
    want = rows * cols * 16
    have = len(blob) - _RAW_HEADER.size
    if have != want:
        raise FormatError(
            f"{source}: byte offset {_RAW_HEADER.size}: payload of {have} bytes does not match "
            f"{rows}x{cols} complex values ({want} bytes)"
        )
    inter = np.frombuffer(blob, dtype="<f8", offset=_RAW_HEADER.size).reshape(rows, cols, 2)
    return inter[..., 0] + 1j * inter[..., 1]


def write_raw(values: np.ndarray, path: PathLike) -> None:
    Path(path).write_bytes(raw_bytes(values))


def read_raw(path: PathLike) -> np.ndarray:
    path = Path(path)
    return raw_from_bytes(path.read_bytes(), str(path))


def write_signal_raw(s: Signal, path: PathLike) -> None:
    write_raw(s.samples[None, :], path)


def read_signal_raw(path: PathLike, dt: float = 1.0) -> Signal:
    """Raw files carry no time axis; ``dt`` must be supplied."""
    values = read_raw(path)
    if values.shape[0] != 1:
        raise FormatError(f"{path}: byte offset 8: expected 1 row for a signal, found {values.shape[0]}")
    return Signal(values[0], dt)


def read_signal(path: PathLike, dt: float = 1.0) -> Signal:
    """Read CSV or raw, picked by the file's leading bytes."""
    path = Path(path)
    with path.open("rb") as fh:
        head = fh.read(len(RAW_MAGIC))
    if head == RAW_MAGIC:
        return read_signal_raw(path, dt)
    return read_signal_csv(path)


def write_signal(s: Signal, path: PathLike, fmt: str = "csv") -> None:
    if fmt == "raw":
        write_signal_raw(s, path)
    else:
        write_signal_csv(s, path)


# -- cepstrum matrices -------------------------------------------------------


def _matrix_csv(orders: np.ndarray, values: np.ndarray) -> str:
    q = centered_indices(values.shape[1])
    lines = ["order," + ",".join(str(int(v)) for v in q)]
    for a, row in zip(orders, values):
        lines.append(_fmt(a) + "," + ",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _parse_matrix_csv(text: str, source: str) -> tuple[np.ndarray, np.ndarray]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError(f"{source}: line 1: empty file")
    header = lines[0].split(",")
    if header[0] != "order":
        raise FormatError(f"{source}: line 1: first header field must be 'order', got {header[0]!r}")
    try:
        q = [int(v) for v in header[1:]]
    except ValueError as exc:
        raise FormatError(f"{source}: line 1: {exc}") from None
    if q != list(centered_indices(len(q))):
        raise FormatError(f"{source}: line 1: quefrency header is not a centered index run")
    orders, rows = [], []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != len(header):
            raise FormatError(f"{source}: line {lineno}: expected {len(header)} fields, got {len(parts)}")
        try:
            vals = [float(v) for v in parts]
        except ValueError as exc:
            raise FormatError(f"{source}: line {lineno}: {exc}") from None
        orders.append(vals[0])
        rows.append(vals[1:])
    return np.array(orders), np.array(rows).reshape(len(rows), len(q))


def fc_paths(stem: PathLike, fmt: str = "csv") -> dict[str, Path]:
    stem = Path(stem)
    base = stem.with_suffix("") if stem.suffix in (".csv", ".bin") else stem
    paths = {"meta": base.with_name(base.name + ".meta.json")}
    if fmt == "raw":
        paths["data"] = base.with_name(base.name + ".bin")
    else:
        paths["data"] = base.with_name(base.name + ".csv")
        paths["imag"] = base.with_name(base.name + ".imag.csv")
    return paths


def write_fc_matrix(m: FcMatrix, stem: PathLike, fmt: str = "csv", timestamp: bool = True) -> dict[str, Path]:
    """Write the matrix plus its metadata sidecar; returns the written paths.

    CSV output is split into ``<stem>.csv`` (real part, the plotted cepstrum)
    and ``<stem>.imag.csv``; raw output keeps full complex values in one file.
    """
    paths = fc_paths(stem, fmt)
    paths["meta"].parent.mkdir(parents=True, exist_ok=True)
    if fmt == "raw":
        write_raw(m.values, paths["data"])
    elif fmt == "csv":
        paths["data"].write_text(_matrix_csv(m.orders, m.values.real))
        paths["imag"].write_text(_matrix_csv(m.orders, m.values.imag))
    else:
        raise ValueError(f"unknown format {fmt!r}")
    meta = dict(m.metadata)
    meta.update(
        kind="fc_matrix",
        format=fmt,
        orders=[float(a) for a in m.orders],
        rows=int(m.shape[0]),
        cols=int(m.shape[1]),
        version=_version(),
    )
    if timestamp:
        meta["created"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    paths["meta"].write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return paths


def read_fc_matrix(stem: PathLike) -> FcMatrix:
    stem = Path(stem)
    meta_path = fc_paths(stem)["meta"]
    meta = json.loads(meta_path.read_text()) if meta_path.exists() else {}
    fmt = meta.get("format", "raw" if stem.suffix == ".bin" else "csv")
    paths = fc_paths(stem, fmt)
    if fmt == "raw":
        values = read_raw(paths["data"])
        orders = np.asarray(meta.get("orders", np.arange(values.shape[0])), dtype=float)
        if orders.size != values.shape[0]:
            raise FormatError(f"{meta_path}: {orders.size} orders for {values.shape[0]} rows")
    else:
        orders, re = _parse_matrix_csv(paths["data"].read_text(), str(paths["data"]))
        im = np.zeros_like(re)
        if paths["imag"].exists():
            o2, im = _parse_matrix_csv(paths["imag"].read_text(), str(paths["imag"]))
            if im.shape != re.shape or not np.array_equal(o2, orders):
                raise FormatError(f"{paths['imag']}: does not match {paths['data']}")
        values = re + 1j * im
    for key in TIMESTAMP_KEYS:
        meta.pop(key, None)
    return FcMatrix(orders, values, meta)


# -- additivity reports ------------------------------------------------------

REPORT_HEADER = "order,conv_mode,residual_l2,residual_linf,relative_residual,floor_hits,offset_re,offset_im"


def reports_to_csv(reports: Iterable[AdditivityReport]) -> str:
    lines = [REPORT_HEADER]
    for r in reports:
        lines.append(
            ",".join(
                [
                    _fmt(r.order),
                    r.conv_mode,
                    _fmt(r.residual_l2),
                    _fmt(r.residual_linf),
                    _fmt(r.relative_residual),
                    str(r.floor_hits),
                    _fmt(r.offset.real),
                    _fmt(r.offset.imag),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def reports_from_csv(text: str, source: str = "<string>") -> list[AdditivityReport]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != REPORT_HEADER:
        raise FormatError(f"{source}: line 1: expected header {REPORT_HEADER!r}")
    out = []
    for lineno, line in enumerate(lines[1:], start=2):
        p = line.split(",")
        if len(p) != 8:
            raise FormatError(f"{source}: line {lineno}: expected 8 fields, got {len(p)}")
        try:
            out.append(
                AdditivityReport(
                    float(p[0]), float(p[2]), float(p[3]), float(p[4]), p[1], int(p[5]), complex(float(p[6]), float(p[7]))
                )
            )
        except ValueError as exc:
            raise FormatError(f"{source}: line {lineno}: {exc}") from None
    return out


def curves_to_csv(c: AdditivityCurves) -> str:
    """Per-quefrency columns for the overlay plot: trace (blue) and sum (red)."""
    q = centered_indices(len(c.trace))
    lines = ["quefrency,trace_re,trace_im,sum_re,sum_im,wavelet_re,reflectivity_re"]
    summed = c.summed
    for k in range(q.size):
        lines.append(
            ",".join(
                [
                    str(int(q[k])),
                    _fmt(c.trace.values[k].real),
                    _fmt(c.trace.values[k].imag),
                    _fmt(summed[k].real),
                    _fmt(summed[k].imag),
                    _fmt(c.wavelet.values[k].real),
                    _fmt(c.reflectivity.values[k].real),
                ]
            )
        )
    return "\n".join(lines) + "\n"
