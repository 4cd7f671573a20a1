"""Command-line front end.

    fraccep synth       [--config F] [--seed S] [--out-dir D]
    fraccep frft        --in X --order A [--out Y]
    fraccep fconv       --in X --in2 Y --order A [--out H]
    fraccep fc          --in X [--order A] [--floor-rel R] [--back inverse|forward]
    fraccep sweep       [--config F] [--in X] [--orders ...] [--out STEM] [--format csv|raw]
    fraccep additivity  [--config F] [--orders ...] [--conv ordinary|fractional] [--out-dir D]

Exit status: 0 on success, 1 for I/O or numeric errors, 2 for usage errors.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .cepstrum import real_frft_cepstrum
from .config import load_config
from .errors import FraccepError
from .frconv import frconv_spectral, frconv_time
from .frft import frft
from .io import (
    curves_to_csv,
    read_signal,
    reports_to_csv,
    signal_to_csv,
    write_fc_matrix,
    write_signal,
)
from .signal import Signal
from .sweep import RunConfig, additivity_scan, alpha_sweep
from .synth import make_scene

PROG = "fraccep"


def _config(args) -> RunConfig:
    cfg = load_config(args.config) if getattr(args, "config", None) else RunConfig()
    run: dict = {}
    scene: dict = {}
    if getattr(args, "orders", None):
        key = "additivity_orders" if args.command == "additivity" else "orders"
        run[key] = tuple(args.orders)
    for flag, key in (("start", "alpha_start"), ("stop", "alpha_stop"), ("step", "alpha_step")):
        if getattr(args, flag, None) is not None:
            run[key] = getattr(args, flag)
            run["orders"] = None
    for flag, key in (
        ("floor_rel", "floor_rel"),
        ("back", "back_direction"),
        ("conv", "conv_mode"),
        ("format", "format"),
        ("workers", "workers"),
    ):
        if getattr(args, flag, None) is not None:
            run[key] = getattr(args, flag)
    for flag in ("n", "dt", "trace_mode", "trace_order"):
        if getattr(args, flag, None) is not None:
            scene[flag] = getattr(args, flag)
    new_scene = cfg.scene
    if scene:
        new_scene = dataclasses.replace(new_scene, **scene)
    if getattr(args, "seed", None) is not None:
        new_scene = dataclasses.replace(
            new_scene, reflectivity=dataclasses.replace(new_scene.reflectivity, seed=args.seed)
        )
    cfg = dataclasses.replace(cfg, scene=new_scene, **run)
    cfg.validate()
    return cfg


def _emit_signal(s: Signal, out: Optional[str], fmt: str) -> None:
    if out is None or out == "-":
        if fmt == "raw":
            raise FraccepError("raw output needs --out")
        sys.stdout.write(signal_to_csv(s))
    else:
        write_signal(s, out, fmt)


def cmd_synth(args) -> int:
    cfg = _config(args)
    scene = make_scene(cfg.scene)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    ext = "bin" if cfg.format == "raw" else "csv"
    for name, sig in (
        ("wavelet", scene.wavelet),
        ("reflectivity", scene.reflectivity),
        ("trace", scene.trace),
    ):
        path = out_dir / f"{name}.{ext}"
        write_signal(sig, path, cfg.format)
        print(path)
    return 0


def cmd_frft(args) -> int:
    x = read_signal(args.inp, args.dt)
    _emit_signal(frft(x, args.order), args.out, args.format or "csv")
    return 0


def cmd_fconv(args) -> int:
    x = read_signal(args.inp, args.dt)
    y = read_signal(args.inp2, args.dt)
    op = frconv_spectral if args.method == "spectral" else frconv_time
    _emit_signal(op(x, y, args.order), args.out, args.format or "csv")
    return 0


def cmd_fc(args) -> int:
    x = read_signal(args.inp, args.dt)
    ceps = real_frft_cepstrum(x, args.order, args.floor_rel or 1e-10, args.back or "inverse")
    print(f"floor_hits={ceps.floor_hits}", file=sys.stderr)
    _emit_signal(Signal(ceps.values, x.dt), args.out, args.format or "csv")
    return 0


def cmd_sweep(args) -> int:
    cfg = _config(args)
    if args.inp:
        s = read_signal(args.inp, args.dt or 1.0)
    else:
        s = make_scene(cfg.scene).trace
    m = alpha_sweep(s, cfg.alpha_grid(), cfg.floor_rel, cfg.back_direction, workers=cfg.workers)
    if not args.inp:
        m.metadata["scene_config_digest"] = cfg.scene.digest()
    paths = write_fc_matrix(m, args.out or cfg.output, cfg.format)
    for p in paths.values():
        print(p)
    return 0


def cmd_additivity(args) -> int:
    cfg = _config(args)
    results = additivity_scan(cfg)
    text = reports_to_csv([c.report for c in results])
    if args.out_dir:
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "additivity.csv").write_text(text)
        for c in results:
            (out_dir / f"curves_{c.report.order:g}.csv").write_text(curves_to_csv(c))
    sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="Fractional Fourier transform cepstrum toolkit.")
    parser.add_argument("--version", action="version", version=f"{PROG} {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    cfg_opts = argparse.ArgumentParser(add_help=False)
    cfg_opts.add_argument("--config", help="INI run configuration; flags override its fields")
    cfg_opts.add_argument("--seed", type=int, help="reflectivity seed")
    cfg_opts.add_argument("--n", type=int, help="scene length in samples")
    cfg_opts.add_argument("--dt", type=float, help="sample interval in seconds")
    cfg_opts.add_argument("--trace-mode", choices=("ordinary", "fractional"))
    cfg_opts.add_argument("--trace-order", type=float)
    cfg_opts.add_argument("--format", choices=("csv", "raw"))

    ceps_opts = argparse.ArgumentParser(add_help=False)
    ceps_opts.add_argument("--floor-rel", type=float, help="log floor relative to the spectral peak")
    ceps_opts.add_argument("--back", choices=("inverse", "forward"), help="order of the back transform")

    io_opts = argparse.ArgumentParser(add_help=False)
    io_opts.add_argument("--in", dest="inp", required=True, help="input signal (CSV or raw)")
    io_opts.add_argument("--out", help="output file (default: CSV on stdout)")
    io_opts.add_argument("--dt", type=float, default=1.0, help="sample interval for raw input")
    io_opts.add_argument("--format", choices=("csv", "raw"))

    p = sub.add_parser("synth", parents=[cfg_opts], help="write wavelet, reflectivity and trace")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("frft", parents=[io_opts], help="fractional Fourier transform of a signal file")
    p.add_argument("--order", type=float, required=True)
    p.set_defaults(func=cmd_frft)

    p = sub.add_parser("fconv", parents=[io_opts], help="fractional convolution of two signal files")
    p.add_argument("--in2", dest="inp2", required=True, help="second input signal")
    p.add_argument("--order", type=float, required=True)
    p.add_argument("--method", choices=("time", "spectral"), default="time")
    p.set_defaults(func=cmd_fconv)

    p = sub.add_parser("fc", parents=[io_opts, ceps_opts], help="fractional cepstrum of one signal")
    p.add_argument("--order", type=float, default=1.0)
    p.set_defaults(func=cmd_fc)

    p = sub.add_parser("sweep", parents=[cfg_opts, ceps_opts], help="cepstrum image over an order grid")
    p.add_argument("--in", dest="inp", help="signal to sweep (default: the scene trace)")
    p.add_argument("--orders", type=float, nargs="+")
    p.add_argument("--start", type=float)
    p.add_argument("--stop", type=float)
    p.add_argument("--step", type=float)
    p.add_argument("--workers", type=int)
    p.add_argument("--out", help="output stem (default: config 'output')")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("additivity", parents=[cfg_opts, ceps_opts], help="FC(trace) vs FC(wavelet)+FC(reflectivity)")
    p.add_argument("--orders", type=float, nargs="+")
    p.add_argument("--conv", choices=("ordinary", "fractional"))
    p.add_argument("--workers", type=int)
    p.add_argument("--out-dir", help="also write additivity.csv and per-order curves here")
    p.set_defaults(func=cmd_additivity)
    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except OSError as exc:
        where = exc.filename if exc.filename is not None else ""
        print(f"{PROG}: error: {exc.strerror or exc}: {where}".rstrip(": "), file=sys.stderr)
    except (FraccepError, ValueError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
    return 1


def main() -> None:
    sys.exit(run_cli())
