"""Interface values from three- and four-point stencils.

The stencil-level functions take :class:`~dbweno.stencil.Stencil3` /
``Stencil4`` objects and return an :class:`InterfaceValue`.  The
``*_periodic`` functions apply the same formulas to every interface of a
periodic grid at once: entry ``j`` of the output approximates the value at
the right interface of cell ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .region import RegionSide
from .stencil import Mode, Stencil3, Stencil4, UniformGrid, periodic_shift, smoothness_ratio
from .weights import INTERP_BETA, INTERP_MU, RECON_BETA, RECON_MU, WeightFamily

__all__ = [
    "InterfaceValue",
    "sub_values_plus",
    "sub_values_minus",
    "interp3_plus",
    "interp3_minus",
    "interp4_plus",
    "recon3_plus",
    "recon4_plus",
    "lagrange3_plus",
    "lagrange4_plus",
    "cell_averages",
    "neighbours",
    "three_point_plus",
    "three_point_minus",
    "four_point_plus",
    "interp3_periodic",
    "interp4_periodic",
    "recon3_periodic",
    "recon4_periodic",
    "lagrange3_periodic",
    "lagrange4_periodic",
]


@dataclass(frozen=True)
class InterfaceValue:
    value: float
    order_target: int
    interface: RegionSide


def _require(s, mode: Mode, what: str):
    if s.mode is not mode:
        raise ValueError(f"{what} needs a stencil of {mode.value}, got {s.mode.value}")


def _require_side(family: WeightFamily, side: RegionSide):
    if family.side is not side:
        raise ValueError(f"weight family {family.name} is for the {family.side.value} side, not {side.value}")


# -- array kernels ---------------------------------------------------------


def sub_values_plus(s: Stencil3):
    """Both linear candidates at ``x_{i+1/2}``."""
    return s.v0 + 0.5 * (s.v0 - s.vm), s.v0 + 0.5 * (s.vp - s.v0)


def sub_values_minus(s: Stencil3):
    """Both linear candidates at ``x_{i-1/2}``."""
    return s.v0 - 0.5 * (s.v0 - s.vm), s.v0 - 0.5 * (s.vp - s.v0)


def three_point_plus(vm, v0, vp, family: WeightFamily):
    """``w0*(3/2 v0 - 1/2 vm) + w1*(1/2 v0 + 1/2 vp)`` with ``w = family(r+)``."""
    dm, dp = v0 - vm, vp - v0
    w0 = family(smoothness_ratio(dm, dp)).w0
    # increment form: constants come out exactly
    p0, p1 = v0 + 0.5 * dm, v0 + 0.5 * dp
    return p1 + w0 * (p0 - p1)


def three_point_minus(vm, v0, vp, family: WeightFamily):
    """``w0*(1/2 v0 + 1/2 vm) + w1*(3/2 v0 - 1/2 vp)`` with ``w = family(r-)``."""
    dm, dp = v0 - vm, vp - v0
    w0 = family(smoothness_ratio(dp, dm)).w0
    p0, p1 = v0 - 0.5 * dm, v0 - 0.5 * dp
    return p1 + w0 * (p0 - p1)


def four_point_plus(vm, v0, vp, vpp, beta_family: WeightFamily, mu_family: WeightFamily):
    # second half is the x_{(i+1)-1/2} value of the stencil centred on i+1,
    # so its weight sees r- of {v0, vp, vpp}
    left = three_point_plus(vm, v0, vp, beta_family)
    right = three_point_minus(v0, vp, vpp, mu_family)
    return left + 0.5 * (right - left)


# -- stencil-level API -----------------------------------------------------


def interp3_plus(s: Stencil3, family: WeightFamily = INTERP_BETA) -> InterfaceValue:
    _require(s, Mode.POINT, "interp3_plus")
    _require_side(family, RegionSide.PLUS)
    return InterfaceValue(float(three_point_plus(s.vm, s.v0, s.vp, family)), 3, RegionSide.PLUS)


def interp3_minus(s: Stencil3, family: WeightFamily = INTERP_MU) -> InterfaceValue:
    _require(s, Mode.POINT, "interp3_minus")
    _require_side(family, RegionSide.MINUS)
    return InterfaceValue(float(three_point_minus(s.vm, s.v0, s.vp, family)), 3, RegionSide.MINUS)


def interp4_plus(
    s: Stencil4, beta_family: WeightFamily = INTERP_BETA, mu_family: WeightFamily = INTERP_MU
) -> InterfaceValue:
    _require(s, Mode.POINT, "interp4_plus")
    _require_side(beta_family, RegionSide.PLUS)
    _require_side(mu_family, RegionSide.MINUS)
    v = four_point_plus(s.vm, s.v0, s.vp, s.vpp, beta_family, mu_family)
    return InterfaceValue(float(v), 4, RegionSide.PLUS)


def recon3_plus(s: Stencil3) -> InterfaceValue:
    _require(s, Mode.CELL, "recon3_plus")
    return InterfaceValue(float(three_point_plus(s.vm, s.v0, s.vp, RECON_BETA)), 3, RegionSide.PLUS)


def recon4_plus(s: Stencil4) -> InterfaceValue:
    _require(s, Mode.CELL, "recon4_plus")
    v = four_point_plus(s.vm, s.v0, s.vp, s.vpp, RECON_BETA, RECON_MU)
    return InterfaceValue(float(v), 4, RegionSide.PLUS)


def _lagrange3(vm, v0, vp):
    # -1/8 vm + 3/4 v0 + 3/8 vp
    return v0 + (3.0 * (vp - v0) - (vm - v0)) / 8.0


def _lagrange4(vm, v0, vp, vpp):
    # (-vm + 9 v0 + 9 vp - vpp) / 16
    return v0 + 0.5 * (vp - v0) - ((vm - v0) + (vpp - vp)) / 16.0


def lagrange3_plus(s: Stencil3) -> InterfaceValue:
    """Quadratic through the three points, evaluated at ``x_{i+1/2}``."""
    _require(s, Mode.POINT, "lagrange3_plus")
    return InterfaceValue(float(_lagrange3(s.vm, s.v0, s.vp)), 3, RegionSide.PLUS)


def lagrange4_plus(s: Stencil4) -> InterfaceValue:
    """Cubic through the four points, evaluated at ``x_{i+1/2}``."""
    _require(s, Mode.POINT, "lagrange4_plus")
    return InterfaceValue(float(_lagrange4(s.vm, s.v0, s.vp, s.vpp)), 4, RegionSide.PLUS)


# -- whole periodic grids --------------------------------------------------


def neighbours(v, offsets):
    """Periodic neighbour arrays ``v[j + k]`` for each offset ``k``."""
    v = np.asarray(v, dtype=float)
    return [periodic_shift(v, k) for k in offsets]


def interp3_periodic(v, family: WeightFamily = INTERP_BETA):
    return three_point_plus(*neighbours(v, (-1, 0, 1)), family)


def interp4_periodic(v, beta_family: WeightFamily = INTERP_BETA, mu_family: WeightFamily = INTERP_MU):
    return four_point_plus(*neighbours(v, (-1, 0, 1, 2)), beta_family, mu_family)


def recon3_periodic(vbar):
    return three_point_plus(*neighbours(vbar, (-1, 0, 1)), RECON_BETA)


def recon4_periodic(vbar):
    return four_point_plus(*neighbours(vbar, (-1, 0, 1, 2)), RECON_BETA, RECON_MU)


def lagrange3_periodic(v):
    return _lagrange3(*neighbours(v, (-1, 0, 1)))


def lagrange4_periodic(v):
    return _lagrange4(*neighbours(v, (-1, 0, 1, 2)))


_GAUSS_X, _GAUSS_W = np.polynomial.legendre.leggauss(5)


def cell_averages(f, grid: UniformGrid, offset: float = 0.0) -> np.ndarray:
    """Per-cell means of ``f`` by 5-node Gauss-Legendre quadrature.

    ``f`` must accept numpy arrays.  Cell ``j`` is ``[a + (j + offset) dx, a + (j + 1 + offset) dx]``;
    ``offset = -1/2`` centres the cells on the grid nodes.
    """
    dx = grid.dx
    centers = grid.centers() + offset * dx
    x = centers[:, None] + 0.5 * dx * _GAUSS_X[None, :]
    vals = np.asarray(f(x), dtype=float)
    vals = np.broadcast_to(vals, x.shape)
    return 0.5 * vals @ _GAUSS_W
