import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anacont.bounds import (
    Geometry,
    alpha_disk,
    alpha_ellipse,
    alpha_half_strip,
    alpha_strip,
    beta_half_strip,
    bound_report,
    chain_epsilons,
    chain_inequality_margin,
    chain_rate,
    converse_witness,
    decade_length,
    headline_constants,
    verify_chain_inequality,
)
from anacont.conformal import strip_asymp_envelope
from anacont.errors import ParameterError


class TestStrip:
    def test_near_data_line(self):
        assert alpha_strip(1e-12) == pytest.approx(1.0)

    def test_midline(self):
        assert alpha_strip(0.5) == 0.5

    @pytest.mark.parametrize("bad", [0.0, 1.0, -0.1, 1.5])
    def test_rejects(self, bad):
        with pytest.raises(ParameterError):
            alpha_strip(bad)

    def test_witness_quarter(self):
        w = converse_witness("infinite_strip", 1e-8)
        assert abs(w(0.25 + 3.0j)) == pytest.approx(1e-6, rel=1e-12)

    def test_witness_half(self):
        w = converse_witness(Geometry.INFINITE_STRIP, 1e-4)
        assert abs(w(0.5 - 7j)) == pytest.approx(1e-2, rel=1e-12)
        assert w.nu_or_n == pytest.approx(-math.log(1e-4))


class TestDisk:
    @pytest.mark.parametrize("R", [1.5, 2.0, 10.0, 1e6])
    def test_sqrt_R_halves_digits(self, R):
        assert alpha_disk(math.sqrt(R), R) == pytest.approx(0.5, rel=1e-14)

    def test_unit_circle(self):
        assert alpha_disk(1.0, 3.0) == 1.0

    def test_value(self):
        # 1 - ln 1.4 / ln 2 from mpmath.
        assert alpha_disk(1.4, 2) == pytest.approx(0.51457317282975824, rel=1e-14)

    def test_rejects_inside_data_set(self):
        with pytest.raises(ParameterError) as info:
            alpha_disk(0.5, 2)
        assert info.value.code == "inside_data_set"

    def test_rejects_outside(self):
        with pytest.raises(ParameterError) as info:
            alpha_disk(2.0, 2)
        assert info.value.code == "outside_region"

    def test_witness_sharp(self):
        g = converse_witness("disk", 2.0**-10, R=2)
        assert g.nu_or_n == 10
        assert abs(g(math.sqrt(2))) == pytest.approx(2.0**-5, rel=1e-14)
        assert abs(g(2j)) == pytest.approx(1.0)

    def test_witness_rejects_off_sequence(self):
        with pytest.raises(ParameterError) as info:
            converse_witness("disk", 1e-3, R=2)
        assert info.value.code == "epsilon_not_in_sequence"

    def test_witnesses_meet_bounds_at_random_points(self):
        rng = np.random.default_rng(1)
        for R, n in [(2, 10), (3, 7), (1.5, 40)]:
            g = converse_witness("disk", float(R) ** -n, R=R)
            r = rng.uniform(1.0, R, 100)
            z = r * np.exp(2j * np.pi * rng.uniform(size=100))
            for zi in z:
                assert abs(g(zi)) == pytest.approx(g.bound(zi), rel=1e-12)
        h = converse_witness("infinite_strip", 1e-9)
        w = rng.uniform(0.01, 0.99, 100) + 1j * rng.uniform(-50, 50, 100)
        for wi in w:
            assert abs(h(wi)) == pytest.approx(h.bound(wi), rel=1e-12)


class TestHalfStrip:
    def test_origin(self):
        assert alpha_half_strip(0) == pytest.approx(1.0, abs=1e-15)

    def test_two_pi(self):
        # Direct mpmath evaluation of the exponent at x = 2 pi.
        a = alpha_half_strip(2 * math.pi)
        assert a == pytest.approx(6.5855275059921312e-05, rel=1e-12)
        assert 1 / a == pytest.approx(15184.81244046291, rel=1e-10)
        assert round(1 / a, -3) == 15000

    def test_decade_length_limit(self):
        assert decade_length(12.0) == pytest.approx(2 / math.pi * math.log(10), rel=1e-8)
        assert round(decade_length(12.0), 2) == 1.47

    def test_decade_length_defines_tenfold_drop(self):
        for x in (0.0, 1.0, 3.0):
            d = decade_length(x)
            assert alpha_half_strip(x) / alpha_half_strip(x + d) == pytest.approx(10, rel=1e-10)

    def test_beta(self):
        assert beta_half_strip(0) == pytest.approx(4 / math.pi)
        # (4/pi) e^{-pi}, mpmath.
        assert beta_half_strip(2) == pytest.approx(0.055021669616387911, rel=1e-14)

    def test_beta_dominates_alpha(self):
        x = np.linspace(0, 20, 10_000)
        a, b = alpha_half_strip(x), beta_half_strip(x)
        assert np.all(b >= a)
        assert np.all(b[1:] > a[1:])

    def test_formula_fidelity(self):
        x = np.linspace(0, 10, 501)
        resid = alpha_half_strip(x) - 4 / np.pi * np.exp(-np.pi * x / 2) + (4 / np.pi - 1) * np.exp(-np.pi * x)
        assert np.max(np.abs(resid)) < 1e-15

    def test_equals_envelope_lower(self):
        x = np.linspace(0, 10, 101)
        lower, _ = strip_asymp_envelope(x)
        np.testing.assert_allclose(alpha_half_strip(x), lower, rtol=1e-15, atol=0)

    def test_strictly_decreasing(self):
        a = alpha_half_strip(np.linspace(0, 15, 2000))
        assert np.all(np.diff(a) < 0)
        assert np.all((a > 0) & (a <= 1 + 1e-15))

    @pytest.mark.parametrize("f", [alpha_half_strip, beta_half_strip])
    def test_rejects_negative(self, f):
        with pytest.raises(ParameterError):
            f(-0.1)


class TestEllipse:
    def test_interval(self):
        for x in (-1.0, -0.3, 0.0, 0.99, 1.0):
            assert alpha_ellipse(x, 2.0) == 1.0

    def test_half_i(self):
        # rho(i/2) = 1/2 + sqrt(5/4) = golden ratio; mpmath reference.
        assert alpha_ellipse(0.5j, 1 + math.sqrt(2)) == pytest.approx(0.45402059677455100, rel=1e-12)

    def test_against_scalar_rho_on_imaginary_axis(self):
        rho_max = 3.0
        for y in np.linspace(0.01, 1.3, 60):
            rho = y + math.sqrt(1 + y * y)
            expected = 1 - math.log(rho) / math.log(rho_max)
            assert alpha_ellipse(1j * y, rho_max) == pytest.approx(expected, abs=1e-12)

    def test_approaches_zero_at_outer_ellipse(self):
        rho_max = 2.0
        z = 0.5 * (rho_max * (1 - 1e-9) * np.exp(0.7j) + 1 / (rho_max * (1 - 1e-9) * np.exp(0.7j)))
        assert 0 < alpha_ellipse(z, rho_max) < 1e-8

    def test_rejects_outside(self):
        with pytest.raises(ParameterError):
            alpha_ellipse(3j, 2.0)


class TestChainRate:
    def test_optimal_radius_limit(self):
        assert chain_rate(1 / math.e, 1e-12).eta == pytest.approx(math.e, rel=1e-10)

    def test_value(self):
        # 1.5 / (0.5 ln 2), mpmath.
        assert chain_rate(0.5, 0.25).eta == pytest.approx(4.3280851226668902, rel=1e-14)

    def test_grid_minimiser_is_one_over_e(self):
        r = np.linspace(0.01, 0.5, 49_001)
        g = 1 / (r * np.log(1 / r))
        assert r[np.argmin(g)] == pytest.approx(1 / math.e, abs=1e-4)
        assert np.min(g) == pytest.approx(math.e, rel=1e-8)

    def test_eta_at_least_e(self):
        for r in np.linspace(0.02, 0.5, 60):
            for h in (1e-9, 0.01, 0.1, 0.25):
                assert chain_rate(r, h).eta >= math.e * (1 - 1e-12)

    @pytest.mark.parametrize(
        "r,h,code",
        [(0.6, 0.1, "r_too_large"), (0.3, 0.3, "h_too_large"), (0.0, 0.1, "bad_r"), (0.3, 0.0, "bad_h")],
    )
    def test_rejections(self, r, h, code):
        with pytest.raises(ParameterError) as info:
            chain_rate(r, h)
        assert info.value.code == code


class TestChainSchedule:
    def test_start(self):
        rate = chain_rate(1 / math.e, 0.05)
        assert chain_epsilons(1e-12, rate, [0.0])[0] == pytest.approx(1e-12, rel=1e-14)

    def test_value(self):
        # 10**(-16 e^{-e}), mpmath.
        rate = type(chain_rate(0.5, 0.25))(r=1 / math.e, h=0.0, eta=math.e)
        assert chain_epsilons(1e-16, rate, [1.0])[0] == pytest.approx(0.087941005404024631, rel=1e-12)

    def test_digit_ratio_over_two_pi(self):
        rate = type(chain_rate(0.5, 0.25))(r=1 / math.e, h=0.0, eta=math.e)
        e0, e1 = chain_epsilons(1e-16, rate, [0.0, 2 * math.pi])
        ratio = math.log(e0) / math.log(e1)
        assert ratio == pytest.approx(math.exp(2 * math.pi * math.e), rel=1e-9)
        assert round(ratio, -6) == 26_000_000

    def test_digits_follow_exponential(self):
        rate = chain_rate(0.4, 0.1)
        xs = np.linspace(0, 1.5, 31)
        d = -np.log10(chain_epsilons(1e-12, rate, xs))
        np.testing.assert_allclose(d, 12 * np.exp(-rate.eta * xs), rtol=1e-13)
        assert np.all(np.diff(chain_epsilons(1e-12, rate, xs)) > 0)

    def test_rejects_unsorted(self):
        with pytest.raises(ParameterError):
            chain_epsilons(1e-3, chain_rate(0.4, 0.1), [0.2, 0.1])


class TestChainInequality:
    def test_point(self):
        # LHS = 0.41503749927884382, RHS = 0.33890980102886709 (mpmath).
        assert chain_inequality_margin(0.5, 0.25) == pytest.approx(0.076127698249976725, rel=1e-12)

    def test_vanishes_as_h_to_zero(self):
        m = [chain_inequality_margin(0.3, h) for h in (1e-2, 1e-3, 1e-4)]
        assert m[0] > m[1] > m[2] > 0
        assert m[2] < 1e-6

    def test_grid_min_positive(self):
        assert verify_chain_inequality(200, 200) > 0

    def test_grid_min_matches_brute_force(self):
        best = min(
            chain_inequality_margin(0.5 * i / 40, 0.25 * j / 40) for i in range(1, 41) for j in range(1, 41)
        )
        assert verify_chain_inequality(40, 40) == pytest.approx(best, rel=1e-14)

    def test_rejects_tiny_grid(self):
        with pytest.raises(ParameterError):
            verify_chain_inequality(1, 10)


def test_bound_report_disk():
    rep = bound_report("disk", 1.4, epsilon=1e-12, R=2)
    # 10**(-12 * 0.5145731728), mpmath.
    assert rep.predicted_error == pytest.approx(6.6853157818228789e-07, rel=1e-12)
    assert rep.geometry is Geometry.DISK


def test_bound_report_chain_and_halfstrip():
    rate = chain_rate(1 / math.e, 0.05)
    rep = bound_report("chain", 0.5, epsilon=1e-12, rate=rate)
    assert rep.predicted_error == pytest.approx(chain_epsilons(1e-12, rate, [0.5])[0], rel=1e-13)
    assert bound_report("half_strip", 0.0).alpha == pytest.approx(1.0)
    assert bound_report("half_strip", 0.0).predicted_error is None


def test_headline_constants():
    c = headline_constants()
    # mpmath references.
    assert c["half_strip_factor"] == pytest.approx(15184.643890703698, rel=1e-6)
    assert c["chain_factor"] == pytest.approx(26152842.577687773, rel=1e-6)
    assert c["decade_length"] == pytest.approx(1.4658711977588555, rel=1e-6)


@settings(max_examples=200, deadline=None)
@given(st.floats(1.01, 50.0), st.floats(0.0, 0.999), st.floats(0.0, 0.999))
def test_disk_alpha_decreasing_in_modulus(R, s, t):
    lo, hi = sorted((s, t))
    a_lo, a_hi = alpha_disk(R**lo, R), alpha_disk(R**hi, R)
    assert 0 < a_hi <= a_lo <= 1
    assert a_lo == pytest.approx(1 - lo, abs=1e-9)
