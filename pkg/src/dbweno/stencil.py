"""Grid and stencil primitives.

Everything here works on plain floats or on numpy arrays of stencil
entries; array inputs broadcast elementwise so a whole periodic grid can
be processed in one call.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "Mode",
    "UniformGrid",
    "Stencil3",
    "Stencil4",
    "SmoothnessPair",
    "DataBounds",
    "differences",
    "smoothness",
    "smoothness_ratio",
    "data_bounds",
    "periodic_shift",
]


class Mode(str, Enum):
    """What the stencil entries represent."""

    POINT = "point-values"
    CELL = "cell-averages"


@dataclass(frozen=True)
class UniformGrid:
    """Uniform grid of ``n`` points or cells on ``[a, b]``."""

    a: float
    b: float
    n: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not self.b > self.a:
            raise ValueError(f"need b > a, got a={self.a}, b={self.b}")

    @property
    def dx(self) -> float:
        return (self.b - self.a) / self.n

    def nodes(self) -> np.ndarray:
        """Point positions ``a + j*dx``."""
        return self.a + np.arange(self.n) * self.dx

    def centers(self) -> np.ndarray:
        """Cell centers ``a + (j + 1/2)*dx``."""
        return self.a + (np.arange(self.n) + 0.5) * self.dx

    def edges(self) -> np.ndarray:
        """The ``n + 1`` cell edges ``a + j*dx``."""
        return self.a + np.arange(self.n + 1) * self.dx


def _check_finite(*values):
    for v in values:
        if not np.all(np.isfinite(v)):
            raise ValueError("stencil entries must be finite")


@dataclass(frozen=True)
class Stencil3:
    """The three values ``v_{i-1}, v_i, v_{i+1}``."""

    vm: float
    v0: float
    vp: float
    mode: Mode = Mode.POINT

    def __post_init__(self):
        _check_finite(self.vm, self.v0, self.vp)
        object.__setattr__(self, "mode", Mode(self.mode))

    def values(self):
        return (self.vm, self.v0, self.vp)


@dataclass(frozen=True)
class Stencil4:
    """The four values ``v_{i-1}, v_i, v_{i+1}, v_{i+2}``."""

    vm: float
    v0: float
    vp: float
    vpp: float
    mode: Mode = Mode.POINT

    def __post_init__(self):
        _check_finite(self.vm, self.v0, self.vp, self.vpp)
        object.__setattr__(self, "mode", Mode(self.mode))

    def values(self):
        return (self.vm, self.v0, self.vp, self.vpp)

    def left(self) -> Stencil3:
        """Sub-stencil ``{i-1, i, i+1}``."""
        return Stencil3(self.vm, self.v0, self.vp, self.mode)

    def right(self) -> Stencil3:
        """Sub-stencil ``{i, i+1, i+2}``, centred on ``i+1``."""
        return Stencil3(self.v0, self.vp, self.vpp, self.mode)


@dataclass(frozen=True)
class SmoothnessPair:
    """Smoothness parameters ``r+ = D-/D+`` and ``r- = D+/D-``.

    The degenerate flags mark 0/0 ratios, which are reported as 1.
    """

    r_plus: float
    r_minus: float
    degenerate_plus: bool = False
    degenerate_minus: bool = False


@dataclass(frozen=True)
class DataBounds:
    m: float
    M: float


def differences(s: Stencil3):
    """Return ``(v0 - vm, vp - v0)``."""
    return s.v0 - s.vm, s.vp - s.v0


def smoothness_ratio(num, den):
    """Extended-real ratio ``num/den`` used for the smoothness parameters.

    0/0 gives 1, x/0 gives an infinity carrying the sign of ``x`` and
    0/x gives +0. Works elementwise on arrays; scalars come back as float.
    """
    num = np.asarray(num, dtype=float)
    den = np.asarray(den, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        r = num / den
    r = np.where(den == 0, np.copysign(np.inf, num), r)
    r = np.where(num == 0, 0.0, r)
    r = np.where((num == 0) & (den == 0), 1.0, r)
    return r[()] if r.ndim == 0 else r


def smoothness(s: Stencil3) -> SmoothnessPair:
    dm, dp = differences(s)
    degenerate = bool(dm == 0 and dp == 0)
    return SmoothnessPair(
        r_plus=float(smoothness_ratio(dm, dp)),
        r_minus=float(smoothness_ratio(dp, dm)),
        degenerate_plus=degenerate,
        degenerate_minus=degenerate,
    )


def data_bounds(s: Stencil3 | Stencil4) -> DataBounds:
    vals = np.stack(np.broadcast_arrays(*[np.asarray(v, dtype=float) for v in s.values()]))
    m, M = vals.min(axis=0), vals.max(axis=0)
    if m.ndim == 0:
        return DataBounds(float(m), float(M))
    return DataBounds(m, M)


def periodic_shift(v, k: int):
    """``out[j] = v[(j + k) % n]``, i.e. the neighbour ``k`` places right."""
    return np.roll(v, -k)
