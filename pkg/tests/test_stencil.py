import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from dbweno.stencil import (
    Mode,
    Stencil3,
    Stencil4,
    UniformGrid,
    data_bounds,
    differences,
    periodic_shift,
    smoothness,
    smoothness_ratio,
)

from strategies import finite, moderate, stencil_values


class TestGrid:
    def test_spacing_and_positions(self):
        g = UniformGrid(-1.0, 1.0, 40)
        assert g.dx == 0.05
        assert g.nodes()[3] == -1.0 + 3 * g.dx
        assert g.centers()[3] == -1.0 + 3.5 * g.dx
        assert len(g.edges()) == 41
        assert g.edges()[-1] == pytest.approx(1.0)

    @pytest.mark.parametrize("n", [0, -3, 2.5])
    def test_bad_n(self, n):
        with pytest.raises(ValueError):
            UniformGrid(0.0, 1.0, n)

    def test_bad_interval(self):
        with pytest.raises(ValueError):
            UniformGrid(1.0, 1.0, 4)


class TestStencil:
    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            Stencil3(0.0, math.nan, 1.0)
        with pytest.raises(ValueError):
            Stencil4(0.0, 1.0, 2.0, math.inf)

    def test_mode_from_string(self):
        assert Stencil3(0, 1, 2, "cell-averages").mode is Mode.CELL

    def test_substencils(self):
        s = Stencil4(0, 1, 3, 7)
        assert s.left().values() == (0, 1, 3)
        assert s.right().values() == (1, 3, 7)


@pytest.mark.parametrize(
    "vals, expected",
    [((0, 1, 2), (1, 1)), ((1, 1, 1), (0, 0)), ((0, 1, 3), (1, 2))],
)
def test_differences(vals, expected):
    assert differences(Stencil3(*vals)) == expected


@pytest.mark.parametrize(
    "vals, rp, rm",
    [((0, 1, 2), 1.0, 1.0), ((0, 0, 1), 0.0, math.inf), ((0, 1, 0), -1.0, -1.0)],
)
def test_smoothness_examples(vals, rp, rm):
    sp = smoothness(Stencil3(*vals))
    assert (sp.r_plus, sp.r_minus) == (rp, rm)
    assert not sp.degenerate_plus and not sp.degenerate_minus


def test_degenerate_constant():
    sp = smoothness(Stencil3(2.0, 2.0, 2.0))
    assert sp.r_plus == sp.r_minus == 1.0
    assert sp.degenerate_plus and sp.degenerate_minus


def test_infinity_sign_from_numerator():
    sp = smoothness(Stencil3(1.0, 0.0, 0.0))
    assert sp.r_plus == -math.inf
    assert sp.r_minus == 0.0 and math.copysign(1.0, sp.r_minus) == 1.0


def test_ratio_vectorised():
    r = smoothness_ratio(np.array([0.0, 1.0, -2.0, 0.0]), np.array([0.0, 0.0, 4.0, -3.0]))
    np.testing.assert_array_equal(r, [1.0, np.inf, -0.5, 0.0])
    assert isinstance(smoothness_ratio(1.0, 2.0), float)


@pytest.mark.parametrize("vals, m, M", [((0, 1, 2), 0, 2), ((1, 1, 1), 1, 1), ((1, 1, 0), 0, 1)])
def test_data_bounds_examples(vals, m, M):
    b = data_bounds(Stencil3(*vals))
    assert (b.m, b.M) == (m, M)


def test_data_bounds_four_point():
    b = data_bounds(Stencil4(0, 1, 1, -2))
    assert (b.m, b.M) == (-2, 1)


def test_periodic_shift():
    v = np.arange(5)
    np.testing.assert_array_equal(periodic_shift(v, 1), [1, 2, 3, 4, 0])
    np.testing.assert_array_equal(periodic_shift(v, -1), [4, 0, 1, 2, 3])


@given(stencil_values())
def test_smoothness_always_defined(vals):
    sp = smoothness(Stencil3(*vals))
    assert not math.isnan(sp.r_plus) and not math.isnan(sp.r_minus)


@given(finite, finite, finite)
def test_reciprocal(a, b, c):
    s = Stencil3(a, b, c)
    dm, dp = differences(s)
    assume(dm != 0 and dp != 0)
    sp = smoothness(s)
    assume(math.isfinite(sp.r_plus) and math.isfinite(sp.r_minus) and sp.r_plus != 0 and sp.r_minus != 0)
    assert sp.r_plus * sp.r_minus == pytest.approx(1.0, rel=4e-16)


@given(moderate, moderate, moderate, st.sampled_from([-3.0, -0.5, 0.25, 2.0, 8.0]), moderate)
def test_affine_invariance(a, b, c, scale, shift):
    # power-of-two-ish scales keep differences exact enough to compare closely
    s = Stencil3(a, b, c)
    t = Stencil3(scale * a + shift, scale * b + shift, scale * c + shift)
    dm, dp = differences(s)
    assume(abs(dm) > 1e-6 and abs(dp) > 1e-6)
    p, q = smoothness(s), smoothness(t)
    assert q.r_plus == pytest.approx(p.r_plus, rel=1e-6)
    assert q.r_minus == pytest.approx(p.r_minus, rel=1e-6)


@given(stencil_values(width=4))
def test_bounds_bracket_entries(vals):
    b = data_bounds(Stencil4(*vals))
    assert b.m <= b.M
    assert all(b.m <= v <= b.M for v in vals)
