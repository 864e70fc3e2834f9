"""Brute-force certificates used to check the closed-form results.

The boundedness oracle evaluates the blended polynomial straight from the
two linear interpolants; it never looks at the smoothness parameter or
any region formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .stencil import Stencil3

__all__ = [
    "BoundednessReport",
    "RateReport",
    "blend_values",
    "violation",
    "brute_force_bounded",
    "stencil_with_ratio",
    "find_violation",
    "error_norms",
    "convergence_rates",
    "rate_report",
]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class BoundednessReport:
    bounded: bool
    worst_violation: float
    worst_x_rel: float


@dataclass
class RateReport:
    grid_sizes: list
    errors_l1: list
    errors_linf: list
    rates_l1: list = field(default_factory=list)
    rates_linf: list = field(default_factory=list)


def blend_values(vm, v0, vp, alpha0, x_rel):
    """``alpha0*v^0(x) + (1 - alpha0)*v^1(x)`` at ``x = x_i + x_rel*dx``.

    ``v^0`` passes through ``(x_{i-1}, vm), (x_i, v0)`` and ``v^1`` through
    ``(x_i, v0), (x_{i+1}, vp)``.  Broadcasts over all arguments.
    """
    p0 = vm + (v0 - vm) * (x_rel + 1.0)
    p1 = v0 + (vp - v0) * x_rel
    return alpha0 * p0 + (1.0 - alpha0) * p1


def violation(vm, v0, vp, alpha0, x_rel):
    """Distance of the blend outside ``[min, max]`` of the data, 0 inside.

    Excursions below a rounding allowance of 4 eps scaled by the data and
    weight magnitudes are reported as 0.
    """
    vm, v0, vp = (np.asarray(a, dtype=float) for a in (vm, v0, vp))
    lo = np.minimum(np.minimum(vm, v0), vp)
    hi = np.maximum(np.maximum(vm, v0), vp)
    val = blend_values(vm, v0, vp, alpha0, x_rel)
    scale = np.maximum(np.maximum(abs(vm), abs(v0)), abs(vp))
    tol = 4.0 * _EPS * scale * (1.0 + 2.0 * np.abs(alpha0))
    out = np.maximum(lo - val, val - hi)
    return np.where(out > tol, out, 0.0)


def brute_force_bounded(s: Stencil3, alpha0: float, samples: int = 2001, x_rel=None) -> BoundednessReport:
    """Sample the blend on ``[x_{i-1}, x_{i+1}]`` and report the worst excursion.

    ``x_rel`` overrides the equispaced sample set (positions in units of dx
    relative to ``x_i``).
    """
    if x_rel is None:
        if samples < 100:
            raise ValueError("need at least 100 samples")
        x_rel = np.linspace(-1.0, 1.0, samples)
    x_rel = np.atleast_1d(np.asarray(x_rel, dtype=float))
    viol = violation(s.vm, s.v0, s.vp, alpha0, x_rel)
    j = int(np.argmax(viol))
    worst = float(viol[j])
    return BoundednessReport(worst == 0.0, worst, float(x_rel[j]))


def stencil_with_ratio(r: float, scale: float = 1.0, shift: float = 0.0) -> Stencil3:
    """A stencil whose ``r+ = (v0 - vm)/(vp - v0)`` equals ``r``.

    ``scale`` is the forward difference (or the backward one when ``r`` is
    infinite, since then the forward difference is 0).
    """
    if np.isinf(r):
        back, fwd = np.sign(r) * abs(scale), 0.0
    else:
        back, fwd = r * scale, scale
    return Stencil3(shift - back, shift, shift + fwd)


def find_violation(r: float, alpha0: float, x_rel: float, rng: np.random.Generator, trials: int = 1000):
    """Random search for data with smoothness ``r+ = r`` on which the blend leaves its bounds.

    Returns ``(stencil, report)`` for the first violating draw, or ``None``.
    """
    for _ in range(trials):
        scale = rng.choice([-1.0, 1.0]) * 10.0 ** rng.uniform(-3, 3)
        shift = rng.normal(scale=10.0)
        s = stencil_with_ratio(r, scale, shift)
        rep = brute_force_bounded(s, alpha0, x_rel=[x_rel])
        if not rep.bounded:
            return s, rep
    return None


def error_norms(approx, exact, dx: float):
    """``(dx * sum|e|, max|e|)``."""
    approx = np.asarray(approx, dtype=float)
    exact = np.asarray(exact, dtype=float)
    if approx.shape != exact.shape:
        raise ValueError(f"length mismatch: {approx.shape} vs {exact.shape}")
    err = np.abs(approx - exact)
    return float(dx * err.sum()), float(err.max(initial=0.0))


def convergence_rates(errors):
    """``log2(e_j / e_{j+1})`` for errors on successively doubled grids."""
    e = np.asarray(errors, dtype=float)
    if np.any(~(e > 0)):
        raise ValueError("errors must be positive")
    return list(np.log2(e[:-1] / e[1:]))


def rate_report(grid_sizes, errors_l1, errors_linf) -> RateReport:
    return RateReport(
        list(grid_sizes),
        list(errors_l1),
        list(errors_linf),
        convergence_rates(errors_l1),
        convergence_rates(errors_linf),
    )
