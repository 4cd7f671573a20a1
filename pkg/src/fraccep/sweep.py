"""Order sweeps (cepstrum image) and additivity scans over a synthetic scene."""
from __future__ import annotations

import hashlib
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .cepstrum import DEFAULT_FLOOR_REL, AdditivityCurves, additivity_curves, real_frft_cepstrum
from .errors import ConfigError, FraccepError
from .signal import Signal, SignalLike, as_signal
from .synth import SynthConfig, make_scene

#: default orders for the additivity comparison
ADDITIVITY_ORDERS = (0.9, 0.95, 0.99, 1.15)


class SweepError(FraccepError):
    """A row of a sweep failed; the message names the order."""

    def __init__(self, order: float, cause: Exception):
        super().__init__(f"order {order:g}: {cause}")
        self.order = order


@dataclass(frozen=True, eq=False)
class FcMatrix:
    """One cepstrum row per fractional order."""

    orders: np.ndarray
    values: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        orders = np.asarray(self.orders, dtype=float)
        values = np.asarray(self.values, dtype=np.complex128)
        if values.ndim != 2 or values.shape[0] != orders.size:
            raise ValueError(f"values shape {values.shape} does not match {orders.size} orders")
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "values", values)

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    def row(self, order: float) -> np.ndarray:
        idx = np.flatnonzero(self.orders == order)
        if idx.size == 0:
            raise KeyError(order)
        return self.values[idx[0]]


def signal_digest(s: Signal) -> str:
    h = hashlib.sha256()
    h.update(np.float64(s.dt).tobytes())
    h.update(np.ascontiguousarray(s.samples).tobytes())
    return h.hexdigest()


def _check_orders(orders: Sequence[float]) -> np.ndarray:
    arr = np.asarray(list(orders), dtype=float)
    if arr.size == 0:
        raise ConfigError("order list is empty")
    if not np.all(np.isfinite(arr)):
        raise ConfigError("orders must be finite")
    return arr


def alpha_sweep(
    s: SignalLike,
    orders: Sequence[float],
    floor_rel: float = DEFAULT_FLOOR_REL,
    back_direction: str = "inverse",
    workers: Optional[int] = None,
) -> FcMatrix:
    """Fractional cepstrum of ``s`` at every order, rows in input order.

    Rows are independent; ``workers > 1`` computes them on a thread pool and
    the assembled matrix is identical to the serial one.
    """
    s = as_signal(s)
    arr = _check_orders(orders)

    def row(a: float) -> np.ndarray:
        try:
            return real_frft_cepstrum(s, a, floor_rel, back_direction).values
        except Exception as exc:
            raise SweepError(a, exc) from exc

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, arr))
    else:
        rows = [row(a) for a in arr]
    meta = {
        "floor_rel": floor_rel,
        "back_direction": back_direction,
        "scene_digest": signal_digest(s),
        "dt": s.dt,
    }
    return FcMatrix(arr, np.vstack(rows), meta)


@dataclass
class RunConfig:
    """Everything a sweep or additivity run needs; mirrors the config file."""

    scene: SynthConfig = field(default_factory=SynthConfig)
    alpha_start: float = 0.80
    alpha_stop: float = 1.20
    alpha_step: float = 0.01
    orders: Optional[tuple[float, ...]] = None
    additivity_orders: tuple[float, ...] = ADDITIVITY_ORDERS
    floor_rel: float = DEFAULT_FLOOR_REL
    back_direction: str = "inverse"
    conv_mode: str = "fractional"
    output: str = "fc"
    format: str = "csv"
    workers: int = 1

    def alpha_grid(self) -> np.ndarray:
        """Explicit ``orders`` if set, else ``start..stop`` (inclusive) by ``step``."""
        if self.orders is not None:
            grid = _check_orders(self.orders)
        else:
            if not (self.alpha_step > 0 and math.isfinite(self.alpha_step)):
                raise ConfigError(f"alpha_step must be positive, got {self.alpha_step}")
            count = int(math.floor((self.alpha_stop - self.alpha_start) / self.alpha_step + 1e-9)) + 1
            if count < 1:
                raise ConfigError("alpha grid is empty")
            # rounding keeps e.g. 0.8 + 20 * 0.01 == 1.0
            grid = np.round(self.alpha_start + self.alpha_step * np.arange(count), 12)
        if np.any(np.diff(grid) <= 0):
            raise ConfigError("orders must be strictly increasing")
        return grid

    def validate(self) -> None:
        self.scene.validate()
        self.alpha_grid()
        _check_orders(self.additivity_orders)
        if not (0 < self.floor_rel < 1):
            raise ConfigError(f"floor_rel must lie in (0, 1), got {self.floor_rel}")
        if self.back_direction not in ("inverse", "forward"):
            raise ConfigError(f"back_direction must be inverse or forward, got {self.back_direction!r}")
        if self.conv_mode not in ("ordinary", "fractional"):
            raise ConfigError(f"conv_mode must be ordinary or fractional, got {self.conv_mode!r}")
        if self.format not in ("csv", "raw"):
            raise ConfigError(f"format must be csv or raw, got {self.format!r}")


def additivity_scan(cfg: RunConfig) -> list[AdditivityCurves]:
    """Additivity comparison at each of ``cfg.additivity_orders``.

    Wavelet and reflectivity are taken on the padded grid of the scene so
    that circular convolution does not wrap.
    """
    cfg.validate()
    scene = make_scene(cfg.scene)
    w, r = scene.padded()
    orders = _check_orders(cfg.additivity_orders)

    def one(a: float) -> AdditivityCurves:
        try:
            return additivity_curves(w, r, a, cfg.conv_mode, cfg.floor_rel, cfg.back_direction)
        except Exception as exc:
            raise SweepError(a, exc) from exc

    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            return list(pool.map(one, orders))
    return [one(a) for a in orders]
