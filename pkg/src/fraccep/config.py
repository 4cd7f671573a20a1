"""INI-style run configuration.

Section and key names mirror :class:`RunConfig` and :class:`SynthConfig`::

    [scene]
    n = 512
    dt = 0.004

    [scene.ricker1]
    peak_freq = 25

    [scene.reflectivity]
    amplitude_range = 0.2, 1.0
    seed = 42

    [run]
    alpha_start = 0.8
    orders = 0.9, 1.0, 1.1
"""
from __future__ import annotations

import configparser
import dataclasses
from io import StringIO
from pathlib import Path
from typing import Any, Union

from .errors import ConfigError
from .synth import ReflectivitySpec, RickerSpec, SynthConfig
from .sweep import RunConfig

_SECTIONS = {
    "scene": SynthConfig,
    "scene.ricker1": RickerSpec,
    "scene.ricker2": RickerSpec,
    "scene.reflectivity": ReflectivitySpec,
    "run": RunConfig,
}
_NESTED = {"ricker1", "ricker2", "reflectivity", "scene"}
_TUPLES = {"amplitude_range", "orders", "additivity_orders"}


def _fields(cls) -> dict[str, Any]:
    return {f.name: f for f in dataclasses.fields(cls) if f.name not in _NESTED}


def _convert(section: str, key: str, raw: str, default: Any) -> Any:
    try:
        if key in _TUPLES:
            items = [v for v in raw.replace(",", " ").split() if v]
            return tuple(float(v) for v in items) if items else None
        if isinstance(default, bool):
            return raw.strip().lower() in ("1", "true", "yes", "on")
        if isinstance(default, int):
            return int(raw)
        if isinstance(default, float):
            return float(raw)
        return raw.strip()
    except ValueError as exc:
        raise ConfigError(f"[{section}] {key}: {exc}") from None


def _section_values(parser: configparser.ConfigParser, section: str, cls, base) -> dict[str, Any]:
    known = _fields(cls)
    out = {}
    if not parser.has_section(section):
        return out
    for key, raw in parser.items(section):
        if key not in known:
            raise ConfigError(f"[{section}] unknown key {key!r}")
        out[key] = _convert(section, key, raw, getattr(base, key))
    return out


def parse_config(text: str, source: str = "<string>") -> RunConfig:
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text, source=source)
    except configparser.Error as exc:
        raise ConfigError(f"{source}: {exc}") from None
    for section in parser.sections():
        if section not in _SECTIONS:
            raise ConfigError(f"{source}: unknown section [{section}]")

    base_scene = SynthConfig()
    r1 = dataclasses.replace(base_scene.ricker1, **_section_values(parser, "scene.ricker1", RickerSpec, base_scene.ricker1))
    r2 = dataclasses.replace(base_scene.ricker2, **_section_values(parser, "scene.ricker2", RickerSpec, base_scene.ricker2))
    refl = dataclasses.replace(
        base_scene.reflectivity,
        **_section_values(parser, "scene.reflectivity", ReflectivitySpec, base_scene.reflectivity),
    )
    scene = dataclasses.replace(
        base_scene,
        ricker1=r1,
        ricker2=r2,
        reflectivity=refl,
        **_section_values(parser, "scene", SynthConfig, base_scene),
    )
    base_run = RunConfig()
    run = dataclasses.replace(base_run, scene=scene, **_section_values(parser, "run", RunConfig, base_run))
    run.validate()
    return run


def load_config(path: Union[str, Path]) -> RunConfig:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror or exc}") from None
    return parse_config(text, str(path))


def dump_config(cfg: RunConfig) -> str:
    """Inverse of :func:`parse_config`."""

    def fmt(v: Any) -> str:
        if isinstance(v, tuple):
            return ", ".join(repr(float(x)) for x in v)
        return repr(v) if isinstance(v, float) else str(v)

    parser = configparser.ConfigParser(interpolation=None)
    objs = {
        "scene": cfg.scene,
        "scene.ricker1": cfg.scene.ricker1,
        "scene.ricker2": cfg.scene.ricker2,
        "scene.reflectivity": cfg.scene.reflectivity,
        "run": cfg,
    }
    for section, obj in objs.items():
        parser.add_section(section)
        for name in _fields(type(obj)):
            value = getattr(obj, name)
            if value is None:
                continue
            parser.set(section, name, fmt(value))
    buf = StringIO()
    parser.write(buf)
    return buf.getvalue()
