"""Closed-form data-bounded regions for the weight of a two-stencil blend.

The blended polynomial is ``alpha0 * v0(x) + (1 - alpha0) * v1(x)`` where
``v0`` is the linear interpolant through ``{i-1, i}`` and ``v1`` the one
through ``{i, i+1}``.  All bounds are Moebius functions of the smoothness
parameter ``r``; they are evaluated through :func:`_mobius`, which also
returns the correct limits at ``r = +-inf``.

At ``r == 1`` both linear pieces coincide and every weight is admissible,
so the returned interval is ``(-inf, inf)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "RegionSide",
    "WeightInterval",
    "theorem1_alpha_interval",
    "lemma1_interval",
    "lemma2_interval",
    "lemma1_bounds",
    "lemma2_bounds",
    "corollary_K",
    "corollary_J",
    "j_inner",
    "weno_region_bounds",
    "in_weno_region",
    "sample_region",
]

_BIG = 1e150


class RegionSide(str, Enum):
    PLUS = "plus"  # interface x_{i+1/2}, parameter r+
    MINUS = "minus"  # interface x_{i-1/2}, parameter r-


@dataclass(frozen=True)
class WeightInterval:
    """Closed interval ``[lo, hi]`` on the extended real line.

    The empty set is the explicit variant ``WeightInterval.empty()``.
    """

    lo: float
    hi: float
    is_empty: bool = False

    def __post_init__(self):
        if not self.is_empty and not self.lo <= self.hi:
            raise ValueError(f"interval needs lo <= hi, got [{self.lo}, {self.hi}]")

    @classmethod
    def empty(cls) -> WeightInterval:
        return cls(np.nan, np.nan, is_empty=True)

    @classmethod
    def unbounded(cls) -> WeightInterval:
        return cls(-np.inf, np.inf)

    def __contains__(self, w) -> bool:
        return (not self.is_empty) and self.lo <= w <= self.hi

    def intersect(self, lo: float, hi: float) -> WeightInterval:
        if self.is_empty:
            return self
        a, b = max(self.lo, lo), min(self.hi, hi)
        return WeightInterval(a, b) if a <= b else WeightInterval.empty()


def _mobius(a, b, c, d, r):
    """``(a + b*r) / (c + d*r)`` for extended-real ``r``.

    Large ``|r|`` is evaluated as ``(a/r + b) / (c/r + d)`` so that the
    limits at infinity come out right and nothing overflows.
    """
    r = np.asarray(r, dtype=float)
    big = np.abs(r) > _BIG
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        direct = (a + b * r) / (c + d * r)
        inv = np.where(big, 1.0 / np.where(big, r, 1.0), 0.0)
        far = (a * inv + b) / (c * inv + d)
    return np.where(big, far, direct) + 0.0  # + 0.0 turns -0.0 into 0.0


def _scalar(x):
    x = np.asarray(x)
    return float(x) if x.ndim == 0 else x


def _case_select(r, a, b, c, d):
    """Pick per-element values for the cases r>=1, [0,1), [-1,0], <=-1."""
    return np.select([r >= 1, r >= 0, r >= -1], [a, b, c], d)


def theorem1_alpha_interval(r: float, side: RegionSide, s_rel: float, dx: float = 1.0) -> WeightInterval:
    """Admissible range of ``alpha0 * (x - x_i)`` at ``x = x_i + s_rel*dx``.

    ``side`` selects whether ``r`` is given as ``r+`` or ``r-``; both
    describe the same region for the same stencil.
    """
    if not dx > 0:
        raise ValueError("dx must be positive")
    if not -1.0 <= s_rel <= 1.0:
        raise ValueError("s_rel must lie in [-1, 1]")
    side = RegionSide(side)
    r = float(r)
    if r == 1.0:
        return WeightInterval.unbounded()
    s = float(s_rel)
    if side is RegionSide.PLUS:
        # L+ (r dx + (x - x_i)), L+ (x - x_{i+1}), L+ (x - x_i)
        k1 = _mobius(s, 1.0, 1.0, -1.0, r)
        k2 = _mobius(s - 1.0, 0.0, 1.0, -1.0, r)
        k3 = _mobius(s, 0.0, 1.0, -1.0, r)
    else:
        # L- r (dx - (x - x_i)), -L- (dx + (x - x_i) r), -L- (x - x_i) r
        k1 = _mobius(0.0, 1.0 - s, 1.0, -1.0, r)
        k2 = _mobius(-1.0, -s, 1.0, -1.0, r)
        k3 = _mobius(0.0, -s, 1.0, -1.0, r)
    lo = float(_case_select(r, k1, k2, k2, k1))
    hi = float(_case_select(r, k2, k1, k3, k3))
    return WeightInterval(lo * dx, hi * dx)


def lemma1_bounds(r):
    """Vectorised endpoints of the beta0 region at x_{i+1/2}."""
    r = np.asarray(r, dtype=float)
    a = _mobius(1.0, 2.0, 1.0, -1.0, r)  # (1 + 2r) L
    neg_l = _mobius(-1.0, 0.0, 1.0, -1.0, r)  # -L
    pos_l = _mobius(1.0, 0.0, 1.0, -1.0, r)  # L
    lo = _case_select(r, a, neg_l, neg_l, a)
    hi = _case_select(r, neg_l, a, pos_l, pos_l)
    one = r == 1
    return np.where(one, -np.inf, lo), np.where(one, np.inf, hi)


def lemma2_bounds(r):
    """Vectorised endpoints of the mu0 region at x_{i-1/2}."""
    r = np.asarray(r, dtype=float)
    a = _mobius(2.0, -1.0, 1.0, -1.0, r)  # (2 - r) L
    b = _mobius(0.0, -3.0, 1.0, -1.0, r)  # -3 r L
    c = _mobius(0.0, -1.0, 1.0, -1.0, r)  # -r L
    lo = _case_select(r, a, b, c, c)
    hi = _case_select(r, b, a, a, b)
    one = r == 1
    return np.where(one, -np.inf, lo), np.where(one, np.inf, hi)


def lemma1_interval(r_plus: float) -> WeightInterval:
    lo, hi = lemma1_bounds(r_plus)
    return WeightInterval(float(lo), float(hi))


def lemma2_interval(r_minus: float) -> WeightInterval:
    lo, hi = lemma2_bounds(r_minus)
    return WeightInterval(float(lo), float(hi))


def corollary_K(r_plus):
    """``min(1, sgn(r)/(r - 1))`` with ``sgn(r) = -1`` for ``r <= 0``.

    This is the formula exactly as written: it is negative on ``0 < r < 1``.
    """
    r = np.asarray(r_plus, dtype=float)
    sgn = np.where(r > 0, 1.0, -1.0)
    ratio = _mobius(sgn, 0.0, -1.0, 1.0, r)
    ratio = np.where(r == 1, np.inf, ratio)
    return _scalar(np.minimum(1.0, ratio))


def j_inner(r_minus):
    """``min((2 - r)/(1 - r), -r/(1 - r))``, which is ``-inf`` at ``r = 1``."""
    r = np.asarray(r_minus, dtype=float)
    inner = np.minimum(_mobius(2.0, -1.0, 1.0, -1.0, r), _mobius(0.0, -1.0, 1.0, -1.0, r))
    return _scalar(np.where(r == 1, -np.inf, inner))


def corollary_J(r_minus):
    """``max(0, min((2 - r)/(1 - r), -r/(1 - r)))``; 0 at ``r = 1``."""
    return _scalar(np.maximum(0.0, j_inner(r_minus)))


def weno_region_bounds(r, side: RegionSide):
    """Lemma region clipped to convex weights, ``[lo, hi]`` within ``[0, 1]``.

    Where the clip is empty ``lo > hi`` is returned; vectorised.
    """
    side = RegionSide(side)
    lo, hi = lemma1_bounds(r) if side is RegionSide.PLUS else lemma2_bounds(r)
    return np.maximum(lo, 0.0), np.minimum(hi, 1.0)


def in_weno_region(w, r, side: RegionSide):
    """True where the convex weight ``w`` keeps the interface value bounded.

    Uses the lemma regions intersected with ``[0, 1]``; endpoints count.
    """
    lo, hi = weno_region_bounds(r, side)
    w = np.asarray(w, dtype=float)
    out = (lo <= w) & (w <= hi)
    return bool(out) if out.ndim == 0 else out


def sample_region(r_values, side: RegionSide):
    """Rows ``(r, lo, hi, bound)`` for each ``r``, in input order.

    ``bound`` is K (plus side) or J (minus side) as printed; ``lo``/``hi``
    bracket the admissible convex weights.
    """
    side = RegionSide(side)
    r = np.asarray(r_values, dtype=float)
    if not np.all(np.isfinite(r)):
        raise ValueError("r_values must be finite")
    lo, hi = weno_region_bounds(r, side)
    bound = corollary_K(r) if side is RegionSide.PLUS else corollary_J(r)
    bound = np.broadcast_to(bound, r.shape)
    return [(float(a), float(b), float(c), float(d)) for a, b, c, d in zip(r, lo, hi, bound)]
