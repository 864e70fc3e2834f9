from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dbweno.region import RegionSide, in_weno_region
from dbweno.weights import (
    FAMILY_NAMES,
    WeightFamily,
    beta0_eta,
    beta0_interp,
    beta0_rational,
    beta0_recon,
    mu0_eta,
    mu0_interp,
    mu0_rational,
    mu0_recon,
    omega0_scheme,
)

from strategies import extended_r

INF = np.inf


def w0(pair):
    return pair.w0


@pytest.mark.parametrize(
    "fn, r, expected",
    [
        (beta0_interp, 1.0, 0.25),
        (beta0_interp, 10.0, 1 / 9),
        (beta0_interp, -5.0, 1 / 6),
        (mu0_interp, 1.0, 0.75),
        (mu0_interp, -5.0, 5 / 6),
        (mu0_interp, 2.0, 0.75),
        (beta0_recon, 1.0, 1 / 3),
        (beta0_recon, 10.0, 1 / 9),
        (beta0_recon, INF, 0.0),
        (mu0_recon, 1.0, 2 / 3),
        (mu0_recon, -5.0, 5 / 6),
        (mu0_recon, 0.0, 2 / 3),
        (beta0_rational, 0.0, 0.25),
        (beta0_rational, -5.0, 0.1),
        (beta0_rational, 9.0, 5 / 188),
        (mu0_rational, 1.0, 0.75),
        (mu0_rational, -5.0, 0.9),
        (mu0_rational, 9.0, 183 / 188),
    ],
)
def test_examples(fn, r, expected):
    assert w0(fn(r)) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize(
    "fn, r, eta, expected",
    [
        (beta0_eta, 1.0, 0.25, 0.25),
        (beta0_eta, 3.0, 0.5, 0.25),
        (beta0_eta, -7.0, 0.0, 0.0),
        (mu0_eta, 1.0, 0.25, 0.75),
        (mu0_eta, -1.0, 1.0, 0.5),
        (mu0_eta, 4.0, 0.0, 1.0),
    ],
)
def test_eta_examples(fn, r, eta, expected):
    assert w0(fn(r, eta)) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("fn", [beta0_eta, mu0_eta])
@pytest.mark.parametrize("eta", [-0.1, 1.5])
def test_eta_range(fn, eta):
    with pytest.raises(ValueError):
        fn(0.0, eta)


def test_rational_limits():
    assert w0(beta0_rational(INF)) == w0(beta0_rational(-INF)) == 0.0
    assert w0(mu0_rational(INF)) == w0(mu0_rational(-INF)) == 1.0
    # closed middle branch
    assert w0(beta0_rational(-3.0)) == 0.25 and w0(beta0_rational(5.0)) == 0.25
    assert w0(mu0_rational(-3.0)) == 0.75 and w0(mu0_rational(5.0)) == 0.75


def _literal_rational(r):
    r = Fraction(r)
    if r < -3:
        return Fraction(8) / (3 * r * r + 5), 3 * (r * r - 1) / (3 * r * r + 5)
    if r > 5:
        return Fraction(5) / (3 * r * r - 55), 3 * (r * r - 20) / (3 * r * r - 55)
    return Fraction(1, 4), Fraction(3, 4)


@given(st.floats(-1e4, 1e4))
def test_rational_against_exact_arithmetic(r):
    b, m = _literal_rational(r)
    assert w0(beta0_rational(r)) == pytest.approx(float(b), rel=1e-13, abs=1e-300)
    assert w0(mu0_rational(r)) == pytest.approx(float(m), rel=1e-13)


class TestScheme:
    @pytest.mark.parametrize(
        "r, variant, expected",
        [(0.0, "omega1", 1.0), (1.0, "omega2", 1 / 3), (10.0, "omega1", 1 / 21), (1.0, "omega1", 1 / 3)],
    )
    def test_examples(self, r, variant, expected):
        assert w0(omega0_scheme(r, variant)) == pytest.approx(expected, abs=1e-15)

    @pytest.mark.parametrize("variant", ["omega1", "omega2", "omega_k"])
    def test_limits_and_upwind(self, variant):
        for k in (1.5, 2.0):
            assert w0(omega0_scheme(INF, variant, k)) == 0.0
            assert w0(omega0_scheme(-INF, variant, k)) == 0.0
            assert w0(omega0_scheme(0.0, variant, k)) == 1.0
            assert w0(omega0_scheme(1.0, variant, k)) == pytest.approx(1 / 3, abs=1e-15)

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            omega0_scheme(1.0, "omega3")
        with pytest.raises(ValueError):
            omega0_scheme(1.0, "omega_k", 2.5)

    @given(st.floats(-1e8, 1e8), st.floats(1.5, 2.0))
    def test_reduced_forms_match_literal(self, r, k):
        a = abs(r)
        lit1 = 1 / 3 + 2 / 3 * (1 - 3 * a / (2 * a + 1))
        lit2 = 1 / 3 + 2 / 3 * (1 - min(2 * a / (1 + a), 1.5))
        litk = 1 / 3 + 2 / 3 * (1 - min(k * a, max(1.0, 3 * a / (2 * a + k))))
        assert w0(omega0_scheme(r, "omega1")) == pytest.approx(lit1, abs=1e-14)
        assert w0(omega0_scheme(r, "omega2")) == pytest.approx(lit2, abs=1e-14)
        assert w0(omega0_scheme(r, "omega_k", k)) == pytest.approx(litk, abs=1e-14)

    @given(extended_r, st.sampled_from(["omega1", "omega2", "omega_k"]))
    def test_symmetric_in_r(self, r, variant):
        assert w0(omega0_scheme(r, variant)) == w0(omega0_scheme(-r, variant))


def _families():
    fams = []
    for name in FAMILY_NAMES:
        if name.startswith("eta-"):
            fams += [WeightFamily(name, eta=e) for e in (0.0, 0.25, 0.5, 1.0)]
        elif name == "scheme-omega-k":
            fams += [WeightFamily(name, k=k) for k in (1.5, 1.75, 2.0)]
        else:
            fams.append(WeightFamily(name))
    return fams


FAMILIES = _families()
IDEAL = {
    "interp-beta": 0.25,
    "interp-mu": 0.75,
    "recon-beta": 1 / 3,
    "recon-mu": 2 / 3,
    "rational-beta": 0.25,
    "rational-mu": 0.75,
    "scheme-omega1": 1 / 3,
    "scheme-omega2": 1 / 3,
    "scheme-omega-k": 1 / 3,
}


@pytest.mark.parametrize("fam", FAMILIES, ids=lambda f: f"{f.name}-{f.eta}-{f.k}")
def test_dense_membership(fam):
    r = np.concatenate([np.linspace(-100, 100, 20001), [INF, -INF, -3, 5, -2, 2, 0, 1, -1]])
    assert np.all(in_weno_region(fam(r).w0, r, fam.side))


@given(extended_r, st.sampled_from(FAMILIES))
def test_random_membership_and_convexity(r, fam):
    pair = fam(r)
    assert 0.0 <= pair.w0 <= 1.0 and 0.0 <= pair.w1 <= 1.0
    assert pair.w0 + pair.w1 == pytest.approx(1.0, abs=2.3e-16)
    assert in_weno_region(pair.w0, r, fam.side)


@pytest.mark.parametrize("name", sorted(IDEAL))
def test_ideal_weights(name):
    assert WeightFamily(name).ideal == pytest.approx(IDEAL[name], abs=1e-15)


def test_mu_inner_min_never_exceeds_one():
    r = np.concatenate([np.linspace(-1e3, 1e3, 200001), [INF, -INF]])
    assert np.all(mu0_interp(r).w0 <= 1.0) and np.all(mu0_recon(r).w0 <= 1.0)


class TestFamilyObject:
    def test_unknown(self):
        with pytest.raises(ValueError):
            WeightFamily("nope")

    def test_eta_required(self):
        with pytest.raises(ValueError):
            WeightFamily("eta-beta")

    def test_k_default_and_range(self):
        assert WeightFamily("scheme-omega-k").k == 1.5
        with pytest.raises(ValueError):
            WeightFamily("scheme-omega-k", k=1.0)

    def test_sides(self):
        assert WeightFamily("interp-mu").side is RegionSide.MINUS
        assert WeightFamily("scheme-omega2").side is RegionSide.PLUS

    def test_vectorised_call(self):
        out = WeightFamily("interp-beta")(np.array([1.0, 10.0]))
        np.testing.assert_allclose(out.w0, [0.25, 1 / 9])
