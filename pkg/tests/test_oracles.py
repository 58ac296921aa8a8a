import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from nonspread import (Doppler, GaussianEvolution, GaussianParams, PhysicalConstants,
                       Quadratic, gaussian_density, gaussian_evolved, gaussian_packet,
                       green_function_1d, make_grid, observables, propagate_spectral,
                       rigid_translation)
from nonspread.oracles import cyclic_shift, translation_phase

C = PhysicalConstants(hbar=1.0, m0=1.0, c=10.0)
GE = GaussianEvolution(GaussianParams(x0=0.5, a=1.0, p_x=1.0), C)
REF = gaussian_packet(make_grid(1024, -40.0, 40.0), GaussianParams(0.0, 1.0, 1.0), C)


def printed_envelope_form(ge, x, t):
    """The evolved Gaussian with the envelope factor (1 - i hbar / m0 a^2), no t."""
    p, c = ge.params, ge.consts
    a = p.a
    pref = np.pi ** -0.25 * (a + 1j * c.hbar * t / (c.m0 * a)) ** -0.5
    carrier = np.exp(1j * p.p_x * x / c.hbar - 1j * p.p_x**2 * t / (2 * c.m0 * c.hbar))
    w2 = a**2 + (c.hbar * t / (c.m0 * a)) ** 2
    env = np.exp(-(x - p.x0 - p.p_x * t / c.m0) ** 2 * (1 - 1j * c.hbar / (c.m0 * a**2)) / (2 * w2))
    return pref * carrier * env


class TestGaussianEvolved:

    def test_initial_state(self):
        x = np.linspace(-6, 6, 301)
        p = GE.params
        initial = (np.pi ** -0.25 * p.a ** -0.5 * np.exp(-(x - p.x0) ** 2 / (2 * p.a**2))
                   * np.exp(1j * p.p_x * x / C.hbar))
        np.testing.assert_allclose(gaussian_evolved(GE, x, 0.0), initial, rtol=0, atol=1e-14)

    def test_modulus_is_density(self, rng):
        x = rng.uniform(-10, 10, 100)
        t = rng.uniform(-5, 5, 100)
        lhs = np.abs(gaussian_evolved(GE, x, t)) ** 2
        rhs = gaussian_density(GE, x, t)
        mask = rhs > 1e-250
        np.testing.assert_allclose(lhs[mask], rhs[mask], rtol=1e-12)

    @pytest.mark.parametrize("t", [0.7, 2.0, 4.5])
    def test_matches_spectral_propagation(self, t):
        ge = GaussianEvolution(GaussianParams(0.0, 1.0, 1.0), C)
        exact = gaussian_evolved(ge, REF.grid.x, t)
        num = propagate_spectral(REF, Quadratic(), t).samples
        assert np.linalg.norm(num - exact) / np.linalg.norm(exact) < 1e-8

    def test_printed_envelope_factor_fails_away_from_unit_time(self):
        # with hbar = m0 = a = 1 the two envelope forms coincide only at t = 1
        ge = GaussianEvolution(GaussianParams(0.0, 1.0, 1.0), C)
        x = REF.grid.x
        num1 = propagate_spectral(REF, Quadratic(), 1.0).samples
        num2 = propagate_spectral(REF, Quadratic(), 2.0).samples
        rel = lambda a, b: np.linalg.norm(a - b) / np.linalg.norm(b)
        assert rel(printed_envelope_form(ge, x, 1.0), num1) < 1e-8
        assert rel(printed_envelope_form(ge, x, 2.0), num2) > 0.1
        assert rel(gaussian_evolved(ge, x, 2.0), num2) < 1e-8

    def test_explicit_amplitude_scales_linearly(self):
        ge = GaussianEvolution(GaussianParams(0.0, 2.0, 0.0, normalize=False, amplitude=3.0), C)
        unit = GaussianEvolution(GaussianParams(0.0, 2.0, 0.0), C)
        factor = 3.0 / (np.pi ** -0.25 * 2.0 ** -0.5)
        x = np.linspace(-3, 3, 7)
        np.testing.assert_allclose(gaussian_evolved(ge, x, 1.3), factor * gaussian_evolved(unit, x, 1.3))
        np.testing.assert_allclose(gaussian_density(ge, x, 1.3), factor**2 * gaussian_density(unit, x, 1.3))


class TestGaussianDensity:

    def test_peak_value(self):
        ge = GaussianEvolution(GaussianParams(x0=1.5, a=0.8, p_x=2.0), C)
        assert gaussian_density(ge, 1.5, 0.0) == pytest.approx(np.pi ** -0.5 / 0.8, rel=1e-15)

    @pytest.mark.parametrize("t", [0.0, 1.0, 3.0, -7.0])
    def test_unit_integral(self, t):
        val, _ = quad(lambda x: gaussian_density(GE, x, t), -np.inf, np.inf)
        assert abs(val - 1) < 1e-10

    @pytest.mark.parametrize("t", [0.0, 1.0, 2.5])
    def test_second_moment(self, t):
        mu = GE.centre(t)
        m2, _ = quad(lambda x: (x - mu) ** 2 * gaussian_density(GE, x, t), -np.inf, np.inf)
        a = GE.params.a
        assert m2 == pytest.approx((a**2 + (C.hbar * t / (C.m0 * a)) ** 2) / 2, rel=1e-10)

    def test_centroid_moves_at_momentum_over_mass(self):
        ge = GaussianEvolution(GaussianParams(x0=-1.0, a=0.7, p_x=1.7), PhysicalConstants(1.0, 1.3))
        ts = np.linspace(0, 4, 9)
        centroids = [quad(lambda x: x * gaussian_density(ge, x, t), -np.inf, np.inf, epsabs=1e-13)[0]
                     for t in ts]
        slope = np.polyfit(ts, centroids, 1)[0]
        assert abs(slope - 1.7 / 1.3) < 1e-9


class TestGreenFunction:

    @pytest.mark.parametrize("t", [0.3, 1.0, -2.0])
    def test_modulus_independent_of_x(self, t):
        x = np.linspace(-20, 20, 41)
        np.testing.assert_allclose(np.abs(green_function_1d(x, t, C)) ** 2,
                                   C.m0 / (2 * np.pi * C.hbar * abs(t)), rtol=1e-14)

    def test_branch(self):
        g_pos = green_function_1d(0.0, 2.0, C)
        g_neg = green_function_1d(0.0, -2.0, C)
        assert np.angle(g_pos) == pytest.approx(-np.pi / 4)
        assert g_neg == pytest.approx(np.conj(g_pos))
        assert g_pos == pytest.approx(np.sqrt(C.m0 / (2j * np.pi * C.hbar * 2.0)))

    def test_zero_time(self):
        with pytest.raises(ValueError):
            green_function_1d(0.0, 0.0, C)

    @pytest.mark.parametrize("x", [-1.0, 0.0, 0.4, 2.0])
    def test_convolved_with_narrow_gaussian(self, x):
        # psi(x, t) = integral G(x - x', t) psi(x', 0) dx', evaluated by adaptive quadrature
        ge = GaussianEvolution(GaussianParams(x0=0.0, a=0.4, p_x=0.5), C)
        t = 0.6
        span = 12 * ge.params.a

        def integrand(xp, part):
            val = green_function_1d(x - xp, t, C) * gaussian_evolved(ge, xp, 0.0)
            return val.real if part == 0 else val.imag

        re = quad(integrand, -span, span, args=(0,), limit=400, epsabs=1e-13)[0]
        im = quad(integrand, -span, span, args=(1,), limit=400, epsabs=1e-13)[0]
        assert abs(complex(re, im) - gaussian_evolved(ge, x, t)) < 1e-9


class TestRigidTranslation:

    def test_zero_time(self):
        out = rigid_translation(REF, 1.0, 0.0)
        assert np.max(np.abs(out.samples - REF.samples)) < 1e-15

    @pytest.mark.parametrize("bins", [1, 16, -33, 512])
    def test_grid_multiple_is_cyclic_shift(self, bins):
        v = 2.0
        t = bins * REF.grid.dx / v
        out = rigid_translation(REF, v, t)
        assert np.max(np.abs(np.abs(out.samples) - np.abs(cyclic_shift(REF, bins).samples))) < 1e-13

    @settings(max_examples=50, deadline=None)
    @given(v=st.floats(-9.9, 9.9), t=st.floats(-5, 5))
    def test_equals_doppler_propagation(self, v, t):
        a = propagate_spectral(REF, Doppler(v), t)
        b = rigid_translation(REF, v, t)
        assert np.max(np.abs(a.samples - b.samples)) < 1e-10

    @settings(max_examples=50, deadline=None)
    @given(v=st.floats(-9.9, 9.9), t1=st.floats(-3, 3), t2=st.floats(-3, 3))
    def test_composes(self, v, t1, t2):
        two = rigid_translation(rigid_translation(REF, v, t1), v, t2)
        one = rigid_translation(REF, v, t1 + t2)
        assert np.max(np.abs(two.samples - one.samples)) < 1e-11

    def test_phase(self):
        v, t = 3.0, 0.25
        w = C.rest_frequency
        assert translation_phase(v, t, C) == pytest.approx(np.exp(1j * (w * v**2 / (2 * C.c**2) - w) * t))

    def test_width_preserved(self):
        t = 24 * REF.grid.dx / 1.5
        out = rigid_translation(REF, 1.5, t)
        assert abs(observables(out).width - observables(REF).width) < 1e-10

    def test_superluminal_rejected(self):
        with pytest.raises(ValueError):
            rigid_translation(REF, 10.0, 1.0)
