"""Periodic 1D scalar conservation-law solver with the data-bounded WENO3 flux.

Semi-discrete conservative form ``du_i/dt = -(F_{i+1/2} - F_{i-1/2})/dx``
with global Lax-Friedrichs splitting and SSP-RK3 time stepping.  State
values live at cell centres of the :class:`~dbweno.stencil.UniformGrid`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .stencil import Stencil3, UniformGrid, smoothness_ratio
from .weights import SCHEME_VARIANTS, WeightFamily, omega0_scheme

__all__ = [
    "FluxFunction",
    "ADVECTION",
    "BURGERS",
    "SolveConfig",
    "SolveResult",
    "SolverError",
    "weno3_flux",
    "weno3_flux_array",
    "global_lf_split",
    "semi_discrete_rhs",
    "ssp_rk3_step",
    "solve",
    "burgers_exact",
]


class SolverError(RuntimeError):
    pass


@dataclass(frozen=True)
class FluxFunction:
    """Physical flux ``f`` and the bound ``df_max(u) = max |f'(u)|`` over an array."""

    f: Callable
    df_max: Callable
    name: str = "custom"


ADVECTION = FluxFunction(lambda u: np.asarray(u, dtype=float), lambda u: 1.0, "advection")
BURGERS = FluxFunction(
    lambda u: 0.5 * np.asarray(u, dtype=float) ** 2,
    lambda u: float(np.max(np.abs(u), initial=0.0)),
    "burgers",
)

_SCHEME_FAMILY = {
    "scheme-omega1": "omega1",
    "scheme-omega2": "omega2",
    "scheme-omega-k": "omega_k",
}


def _variant(family) -> tuple[str, float]:
    """Map a scheme family (or a bare variant name) to ``(variant, k)``."""
    if isinstance(family, WeightFamily):
        if family.name not in _SCHEME_FAMILY:
            raise ValueError(f"{family.name} is not a scheme weight family")
        return _SCHEME_FAMILY[family.name], family.k if family.k is not None else 1.5
    if family in _SCHEME_FAMILY:
        return _variant(WeightFamily(family))
    if family in SCHEME_VARIANTS:
        return family, 1.5
    raise ValueError(f"unknown scheme variant {family!r}")


@dataclass(frozen=True)
class SolveConfig:
    grid: UniformGrid
    initial_condition: Callable
    flux: FluxFunction = ADVECTION
    final_time: float = 2.0
    cfl: float = 0.4
    weight_variant: WeightFamily = field(default_factory=lambda: WeightFamily("scheme-omega1"))
    k: float | None = None
    # a constant upwind weight replaces the nonlinear one when set
    fixed_omega0: float | None = None
    snapshot_times: tuple = ()

    def __post_init__(self):
        if not 0.0 < self.cfl < 1.0:
            raise ValueError(f"cfl must lie in (0, 1), got {self.cfl}")
        if not self.final_time > 0.0:
            raise ValueError(f"final_time must be positive, got {self.final_time}")
        fam = self.weight_variant
        if isinstance(fam, str):
            fam = WeightFamily(fam, k=self.k) if fam in _SCHEME_FAMILY else fam
        if isinstance(fam, WeightFamily) and self.k is not None and fam.name == "scheme-omega-k":
            fam = WeightFamily(fam.name, k=self.k)
        _variant(fam)
        object.__setattr__(self, "weight_variant", fam)
        for t in self.snapshot_times:
            if not 0.0 <= t <= self.final_time:
                raise ValueError(f"snapshot time {t} outside [0, {self.final_time}]")


@dataclass
class SolveResult:
    x: np.ndarray
    u0: np.ndarray
    u_final: np.ndarray
    time_steps: int
    min_u0: float
    max_u0: float
    min_uT: float
    max_uT: float
    overshoot: float
    snapshots: dict = field(default_factory=dict)


def _omega0(fm, f0, fp, variant, k, fixed):
    if fixed is not None:
        return fixed
    r = smoothness_ratio(f0 - fm, fp - f0)
    return omega0_scheme(r, variant, k).w0


def weno3_flux_array(fm, f0, fp, variant: str = "omega1", k: float = 1.5, fixed_omega0=None):
    """Upwind-biased flux at ``i+1/2`` from flux values at ``i-1, i, i+1``.

    ``variant`` is one of ``omega1``, ``omega2``, ``omega_k``.
    """
    w0 = _omega0(fm, f0, fp, variant, k, fixed_omega0)
    # w0 (3/2 f0 - 1/2 fm) + (1 - w0)(1/2 f0 + 1/2 fp) in increment form
    upwind, central = f0 + 0.5 * (f0 - fm), f0 + 0.5 * (fp - f0)
    return central + w0 * (upwind - central)


def weno3_flux(f_stencil: Stencil3, variant="scheme-omega1", k: float | None = None) -> float:
    """Data-bounded WENO3 flux; the upwind side is ``f_stencil.vm``."""
    name, k_default = _variant(variant)
    k = k_default if k is None else k
    return float(weno3_flux_array(f_stencil.vm, f_stencil.v0, f_stencil.vp, name, k))


def global_lf_split(flux: FluxFunction, u):
    """``f+- = (f(u) +- alpha u)/2`` with ``alpha = max |f'(u)|``."""
    u = np.asarray(u, dtype=float)
    if not np.all(np.isfinite(u)):
        raise SolverError("state is not finite")
    alpha = float(flux.df_max(u))
    fu = np.asarray(flux.f(u), dtype=float)
    return 0.5 * (fu + alpha * u), 0.5 * (fu - alpha * u), alpha


def _interface_fluxes(u, config: SolveConfig):
    variant, k = _variant(config.weight_variant)
    fplus, fminus, _ = global_lf_split(config.flux, u)
    fixed = config.fixed_omega0
    # positive part: stencil i-1, i, i+1
    right = weno3_flux_array(np.roll(fplus, 1), fplus, np.roll(fplus, -1), variant, k, fixed)
    # negative part: mirrored stencil i+2, i+1, i
    fm1 = np.roll(fminus, -1)
    left = weno3_flux_array(np.roll(fminus, -2), fm1, fminus, variant, k, fixed)
    return right + left


def semi_discrete_rhs(u, config: SolveConfig):
    """``-(F_{i+1/2} - F_{i-1/2})/dx`` on a periodic grid."""
    flux = _interface_fluxes(u, config)
    return -(flux - np.roll(flux, 1)) / config.grid.dx


def ssp_rk3_step(u, dt: float, config: SolveConfig, rhs: Callable | None = None):
    """One Shu-Osher SSP-RK3 step; ``rhs`` defaults to :func:`semi_discrete_rhs`."""
    if not dt > 0:
        raise ValueError("dt must be positive")
    L = rhs if rhs is not None else (lambda v: semi_discrete_rhs(v, config))
    u = np.asarray(u, dtype=float)
    u1 = u + dt * L(u)
    u2 = 0.75 * u + 0.25 * (u1 + dt * L(u1))
    return u / 3.0 + 2.0 / 3.0 * (u2 + dt * L(u2))


def solve(config: SolveConfig) -> SolveResult:
    x = config.grid.centers()
    u0 = np.asarray(config.initial_condition(x), dtype=float) * np.ones_like(x)
    if not np.all(np.isfinite(u0)):
        raise SolverError("initial condition is not finite")
    u = u0.copy()
    t, steps = 0.0, 0
    dx = config.grid.dx
    pending = sorted(set(float(s) for s in config.snapshot_times))
    snaps = {}
    while pending and pending[0] <= 0.0:
        snaps[pending.pop(0)] = u.copy()
    while t < config.final_time:
        alpha = float(config.flux.df_max(u))
        stop = pending[0] if pending else config.final_time
        dt = config.cfl * dx / alpha if alpha > 0 else stop - t
        if t + dt >= stop:
            dt = stop - t
        u = ssp_rk3_step(u, dt, config)
        steps += 1
        if not np.all(np.isfinite(u)):
            raise SolverError(f"state became non-finite at step {steps}, t={t + dt}")
        t = stop if t + dt >= stop else t + dt
        while pending and pending[0] <= t:
            snaps[pending.pop(0)] = u.copy()
    lo0, hi0 = float(u0.min()), float(u0.max())
    loT, hiT = float(u.min()), float(u.max())
    overshoot = max(0.0, hiT - hi0) + max(0.0, lo0 - loT)
    return SolveResult(x, u0, u, steps, lo0, hi0, loT, hiT, overshoot, snaps)


def burgers_exact(x, t: float, tol: float = 1e-15, maxiter: int = 100):
    """Smooth Burgers solution for ``u0 = sin(pi x)``: solves ``u = sin(pi (x - u t))``.

    Newton iteration on the characteristic equation; valid for ``t < 1/pi``.
    """
    if not 0.0 <= t < 1.0 / np.pi:
        raise ValueError("the smooth solution only exists for 0 <= t < 1/pi")
    x = np.asarray(x, dtype=float)
    u = np.sin(np.pi * x)
    for _ in range(maxiter):
        phase = np.pi * (x - u * t)
        step = (u - np.sin(phase)) / (1.0 + np.pi * t * np.cos(phase))
        u = u - step
        if np.max(np.abs(step), initial=0.0) < tol:
            break
    return u
