"""Data-bounded nonlinear weights.

Every function takes the smoothness parameter as a float or an array
(entries may be +-inf) and returns a :class:`WeightPair` whose ``w0`` is
the weight of the left (upwind) linear piece.  The plus-side families
(``beta``, ``omega``) use ``r+``; the minus-side ones (``mu``) use ``r-``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .region import RegionSide, corollary_J, corollary_K, j_inner

__all__ = [
    "WeightPair",
    "WeightFamily",
    "FAMILY_NAMES",
    "beta0_interp",
    "mu0_interp",
    "beta0_recon",
    "mu0_recon",
    "beta0_eta",
    "mu0_eta",
    "beta0_rational",
    "mu0_rational",
    "omega0_scheme",
]


@dataclass(frozen=True)
class WeightPair:
    w0: float
    w1: float


def _pair(w0) -> WeightPair:
    w0 = np.asarray(w0, dtype=float)
    if w0.ndim == 0:
        w0 = float(w0)
    return WeightPair(w0, 1.0 - w0)


def _arr(r):
    return np.asarray(r, dtype=float)


def beta0_interp(r_plus) -> WeightPair:
    """``min(1/4, |K|)``."""
    return _pair(np.minimum(0.25, np.abs(corollary_K(r_plus))))


def beta0_recon(r_plus) -> WeightPair:
    """``min(1/3, |K|)``."""
    return _pair(np.minimum(1.0 / 3.0, np.abs(corollary_K(r_plus))))


def mu0_interp(r_minus) -> WeightPair:
    """``max(3/4, min((2 - r)/(1 - r), -r/(1 - r)))``."""
    return _pair(np.maximum(0.75, j_inner(r_minus)))


def mu0_recon(r_minus) -> WeightPair:
    """``max(2/3, min((2 - r)/(1 - r), -r/(1 - r)))``."""
    return _pair(np.maximum(2.0 / 3.0, j_inner(r_minus)))


def _check_eta(eta):
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"eta must lie in [0, 1], got {eta}")


def beta0_eta(r_plus, eta: float) -> WeightPair:
    """``eta * K``, with negative K (on 0 < r < 1) taken as 0."""
    _check_eta(eta)
    return _pair(eta * np.maximum(0.0, corollary_K(r_plus)))


def mu0_eta(r_minus, eta: float) -> WeightPair:
    """``1 - eta * (1 - J)``, evaluated as ``J + (1 - eta)(1 - J)``."""
    _check_eta(eta)
    j = corollary_J(r_minus)
    return _pair(np.minimum(1.0, j + (1.0 - eta) * (1.0 - j)))


def _rational_tail(r, c_low, c_high):
    # c/(3r^2 + k) written with 1/r^2 so huge |r| does not overflow to nan
    r = _arr(r)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        inv2 = 1.0 / (r * r)
        low = np.where(np.isinf(r), 0.0, c_low[0] * inv2 / (3.0 + c_low[1] * inv2))
        high = np.where(np.isinf(r), 0.0, c_high[0] * inv2 / (3.0 + c_high[1] * inv2))
    return low, high


def beta0_rational(r_plus) -> WeightPair:
    """1/4 on ``[-3, 5]``, ``8/(3r^2 + 5)`` below, ``5/(3r^2 - 55)`` above."""
    r = _arr(r_plus)
    low, high = _rational_tail(r, (8.0, 5.0), (5.0, -55.0))
    return _pair(np.select([r < -3, r > 5], [low, high], 0.25))


def mu0_rational(r_minus) -> WeightPair:
    """3/4 on ``[-3, 5]``, ``3(r^2 - 1)/(3r^2 + 5)`` below, ``3(r^2 - 20)/(3r^2 - 55)`` above.

    The tails equal ``1 - 8/(3r^2 + 5)`` and ``1 - 5/(3r^2 - 55)``, which is
    how they are evaluated.
    """
    r = _arr(r_minus)
    low, high = _rational_tail(r, (8.0, 5.0), (5.0, -55.0))
    return _pair(np.select([r < -3, r > 5], [1.0 - low, 1.0 - high], 0.75))


SCHEME_VARIANTS = ("omega1", "omega2", "omega_k")


def omega0_scheme(r, variant: str = "omega1", k: float = 1.5) -> WeightPair:
    """Upwind weight of the third-order flux; depends on ``|r|`` only.

    ``omega1``: ``1/3 + 2/3 (1 - 3|r|/(2|r| + 1))``
    ``omega2``: ``1/3 + 2/3 (1 - min(2|r|/(1 + |r|), 3/2))``
    ``omega_k``: ``1/3 + 2/3 (1 - min(k|r|, max(1, 3|r|/(2|r| + k))))``, ``1.5 <= k <= 2``

    Each is evaluated piecewise in reduced form (e.g. ``omega1 = 1/(2|r| + 1)``).
    For ``k = 2`` the weight touches the region boundary ``1/(1 - r)`` for
    ``r <= -2``, and only the reduced form rounds the same way as the bound.
    """
    if variant not in SCHEME_VARIANTS:
        raise ValueError(f"unknown scheme variant {variant!r}")
    if variant == "omega_k" and not 1.5 <= k <= 2.0:
        raise ValueError(f"k must lie in [1.5, 2], got {k}")
    a = np.abs(_arr(r))
    with np.errstate(over="ignore", invalid="ignore"):
        if variant == "omega1":
            w = 1.0 / (2.0 * a + 1.0)
        elif variant == "omega2":
            w = np.where(a >= 3.0, 0.0, (3.0 - a) / (3.0 * (1.0 + a)))
        else:
            w = np.select([k * a <= 1.0, a < k], [1.0 - 2.0 * k * a / 3.0, 1.0 / 3.0], k / (2.0 * a + k))
    return _pair(w)


FAMILY_NAMES = (
    "interp-beta",
    "interp-mu",
    "recon-beta",
    "recon-mu",
    "eta-beta",
    "eta-mu",
    "rational-beta",
    "rational-mu",
    "scheme-omega1",
    "scheme-omega2",
    "scheme-omega-k",
)


@dataclass(frozen=True)
class WeightFamily:
    """A named weight family with its optional parameter (``eta`` or ``k``)."""

    name: str
    eta: float | None = None
    k: float | None = None

    def __post_init__(self):
        if self.name not in FAMILY_NAMES:
            raise ValueError(f"unknown weight family {self.name!r}; expected one of {', '.join(FAMILY_NAMES)}")
        if self.name.startswith("eta-"):
            if self.eta is None:
                raise ValueError(f"family {self.name} needs eta")
            _check_eta(self.eta)
        if self.name == "scheme-omega-k":
            if self.k is None:
                object.__setattr__(self, "k", 1.5)
            if not 1.5 <= self.k <= 2.0:
                raise ValueError(f"k must lie in [1.5, 2], got {self.k}")

    @property
    def side(self) -> RegionSide:
        return RegionSide.MINUS if self.name.endswith("-mu") else RegionSide.PLUS

    @property
    def ideal(self) -> float:
        """Weight returned in smooth regions (``r = 1``)."""
        return float(self(1.0).w0)

    def __call__(self, r) -> WeightPair:
        n = self.name
        if n == "interp-beta":
            return beta0_interp(r)
        if n == "interp-mu":
            return mu0_interp(r)
        if n == "recon-beta":
            return beta0_recon(r)
        if n == "recon-mu":
            return mu0_recon(r)
        if n == "eta-beta":
            return beta0_eta(r, self.eta)
        if n == "eta-mu":
            return mu0_eta(r, self.eta)
        if n == "rational-beta":
            return beta0_rational(r)
        if n == "rational-mu":
            return mu0_rational(r)
        if n == "scheme-omega1":
            return omega0_scheme(r, "omega1")
        if n == "scheme-omega2":
            return omega0_scheme(r, "omega2")
        return omega0_scheme(r, "omega_k", self.k)


INTERP_BETA = WeightFamily("interp-beta")
INTERP_MU = WeightFamily("interp-mu")
RECON_BETA = WeightFamily("recon-beta")
RECON_MU = WeightFamily("recon-mu")
