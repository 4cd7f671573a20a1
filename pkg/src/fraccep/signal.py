"""Sampled signals on a centered grid and fractional orders."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import InvalidSignalError, SingularOrderError

#: snap distance to an integer order (identity, DFT, reversal, inverse DFT)
EPS_ORDER = 1e-8


@dataclass(frozen=True, eq=False)
class Signal:
    """Uniformly sampled complex sequence on a centered time grid.

    Sample ``k`` sits at ``t_k = (k - n // 2) * dt``. Samples are stored as
    ``complex128`` regardless of the input dtype.
    """

    samples: np.ndarray
    dt: float = 1.0

    def __post_init__(self):
        x = np.array(self.samples, dtype=np.complex128)
        if x.ndim != 1:
            raise InvalidSignalError(f"samples must be 1-D, got shape {x.shape}")
        if x.size < 2:
            raise InvalidSignalError(f"signal length must be >= 2, got {x.size}")
        if not np.all(np.isfinite(x)):
            raise InvalidSignalError("signal contains non-finite samples")
        dt = float(self.dt)
        if not (math.isfinite(dt) and dt > 0):
            raise InvalidSignalError(f"dt must be positive and finite, got {self.dt!r}")
        x.setflags(write=False)
        object.__setattr__(self, "samples", x)
        object.__setattr__(self, "dt", dt)

    def __len__(self) -> int:
        return self.samples.size

    @property
    def n(self) -> int:
        return self.samples.size

    @property
    def t(self) -> np.ndarray:
        """Sample times in seconds (centered)."""
        return centered_indices(self.n) * self.dt

    @property
    def energy(self) -> float:
        return float(np.vdot(self.samples, self.samples).real)

    def is_real(self, tol: float = 0.0) -> bool:
        scale = max(np.max(np.abs(self.samples)), 1.0)
        return bool(np.max(np.abs(self.samples.imag)) <= tol * scale)

    def replace(self, samples) -> "Signal":
        """New signal on the same grid with different samples."""
        return Signal(samples, self.dt)

    def __eq__(self, other):
        if not isinstance(other, Signal):
            return NotImplemented
        return self.dt == other.dt and np.array_equal(self.samples, other.samples)

    __hash__ = None


SignalLike = Union[Signal, np.ndarray, list]


def as_signal(x: SignalLike, dt: float = 1.0) -> Signal:
    if isinstance(x, Signal):
        return x
    return Signal(np.asarray(x), dt)


def centered_indices(n: int) -> np.ndarray:
    """Integer indices ``k - n // 2`` for ``k = 0..n-1``."""
    return np.arange(n) - n // 2


def dimensionless_grid(n: int) -> np.ndarray:
    """Centered grid ``u_k = (k - n // 2) / sqrt(n)``.

    Time and frequency both span ``sqrt(n)`` units on this grid, which is
    what makes the discrete fractional transform order-additive.

    >>> dimensionless_grid(4)
    array([-1. , -0.5,  0. ,  0.5])
    """
    if int(n) != n or n < 2:
        raise InvalidSignalError(f"grid length must be an integer >= 2, got {n!r}")
    n = int(n)
    return centered_indices(n) / math.sqrt(n)


@dataclass(frozen=True)
class FrftOrder:
    """Fractional order ``a``; the rotation angle is ``a * pi / 2``.

    Only the order reduced modulo 4 into ``(-2, 2]`` affects a transform.
    """

    a: float

    def __post_init__(self):
        a = float(self.a)
        if not math.isfinite(a):
            raise ValueError(f"fractional order must be finite, got {self.a!r}")
        object.__setattr__(self, "a", a)

    @property
    def reduced(self) -> float:
        r = self.a - 4.0 * math.floor((self.a + 2.0) / 4.0)
        # floor maps onto [-2, 2); the half-open interval is (-2, 2]
        return 2.0 if r <= -2.0 else r

    @property
    def angle(self) -> float:
        return self.reduced * math.pi / 2

    @property
    def integer_branch(self) -> int | None:
        """``k in {0, 1, 2, 3}`` if the reduced order is within EPS_ORDER of ``k`` mod 4."""
        r = self.reduced
        for k in (-2, -1, 0, 1, 2):
            if abs(r - k) < EPS_ORDER:
                return k % 4
        return None

    def cot_csc(self) -> tuple[float, float]:
        """``(cot phi, csc phi)``, exact at odd integer orders.

        Raises SingularOrderError at orders congruent to 0 or 2.
        """
        k = self.integer_branch
        if k in (0, 2):
            raise SingularOrderError(
                f"order {self.a} is within {EPS_ORDER} of an even integer; cot/csc are unbounded"
            )
        if k == 1:
            return 0.0, 1.0
        if k == 3:
            return 0.0, -1.0
        phi = self.angle
        s = math.sin(phi)
        return math.cos(phi) / s, 1.0 / s

    def __neg__(self) -> "FrftOrder":
        return FrftOrder(-self.a)

    def __float__(self) -> float:
        return self.a


OrderLike = Union[FrftOrder, float, int]


def as_order(a: OrderLike) -> FrftOrder:
    return a if isinstance(a, FrftOrder) else FrftOrder(a)

