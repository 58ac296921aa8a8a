import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonspread import (Doppler, FourMomentum, FrameBoost, PhysicalConstants, boost,
                       boost_energy, boost_momentum, gamma, nonrel_energy, omega)
from nonspread.acceptance import nonrel_slope
from nonspread.kinematics import rest_frame

C = PhysicalConstants(hbar=1.0, m0=1.0, c=10.0)

unit = st.tuples(*[st.floats(-1, 1)] * 3).filter(lambda u: 0.1 < np.linalg.norm(u))


def random_boost(rng, c=10.0, max_beta=0.99):
    d = rng.normal(size=3)
    return FrameBoost(d / np.linalg.norm(d) * rng.uniform(0, max_beta * c), c)


class TestGamma:

    def test_at_rest(self):
        assert gamma(FrameBoost(0.0, 10.0)) == 1.0

    def test_three_fifths(self):
        assert gamma(FrameBoost([0.0, 6.0, 0.0], 10.0)) == pytest.approx(1.25, rel=1e-15)

    def test_monotone_divergence(self):
        speeds = 10.0 * (1 - np.logspace(-1, -12, 30))
        g = [gamma(FrameBoost(v, 10.0)) for v in speeds]
        assert np.all(np.diff(g) > 0)
        assert g[-1] > 1e5

    @pytest.mark.parametrize("v", [10.0, -10.0, [6.0, 8.0, 0.0], 11.0])
    def test_rejects_luminal(self, v):
        with pytest.raises(ValueError):
            FrameBoost(v, 10.0)


class TestBoost:

    def test_identity_boost(self):
        m = FourMomentum(5.0, [1.0, -2.0, 0.5])
        b = FrameBoost(0.0, 10.0)
        np.testing.assert_array_equal(boost_momentum(b, m), m.p)
        assert boost_energy(b, m) == 5.0

    def test_rest_frame_momentum(self):
        b = FrameBoost([3.0, -4.0, 1.0], 10.0)
        p = boost_momentum(b, rest_frame(C))
        np.testing.assert_allclose(p, gamma(b) * C.m0 * b.v, rtol=1e-15)

    def test_rest_frame_energy_two_ways(self, rng):
        for _ in range(50):
            b = random_boost(rng)
            rest = rest_frame(C)
            p = boost_momentum(b, rest)
            e_mixed = np.dot(b.v, p) + C.m0 * C.c**2 / gamma(b)
            assert boost_energy(b, rest, p) == e_mixed
            assert e_mixed == pytest.approx(gamma(b) * C.m0 * C.c**2, rel=1e-12)

    def test_round_trip(self, rng):
        for _ in range(1000):
            b = random_boost(rng)
            m0 = rng.uniform(0.1, 10)
            p0 = rng.normal(size=3) * m0 * b.c
            E0 = np.sqrt(p0 @ p0 * b.c**2 + (m0 * b.c**2) ** 2)
            back = boost(b.inverse(), boost(b, FourMomentum(E0, p0)))
            scale = max(E0, np.linalg.norm(p0) * b.c)
            assert abs(back.E - E0) <= 1e-12 * scale
            assert np.linalg.norm(back.p - p0) * b.c <= 1e-12 * scale

    def test_invariant_mass(self, rng):
        for _ in range(500):
            b = random_boost(rng)
            m0 = rng.uniform(0.1, 5)
            p0 = rng.normal(size=3) * m0 * b.c * 0.5
            E0 = np.sqrt(p0 @ p0 * b.c**2 + (m0 * b.c**2) ** 2)
            start = FourMomentum(E0, p0)
            out = boost(b, start)
            assert out.invariant_mass_sq(b.c) == pytest.approx(start.invariant_mass_sq(b.c), rel=1e-10)

    def test_standard_energy_boost(self, rng):
        # the mixed-frame energy equals gamma (E' + v.p') once p is eliminated
        for _ in range(100):
            b = random_boost(rng)
            start = FourMomentum(rng.uniform(50, 200), rng.normal(size=3))
            assert boost(b, start).E == pytest.approx(gamma(b) * (start.E + b.v @ start.p), rel=1e-12)


class TestNonrel:

    def test_at_rest(self):
        assert nonrel_energy(0.0, 3.7, C) == 100.0
        assert nonrel_energy([0.0, 0.0, 0.0], [1.0, 2.0, 3.0], C) == 100.0

    def test_small_velocity_accuracy(self):
        b = FrameBoost(0.01 * C.c, C.c)
        rest = rest_frame(C)
        p = boost_momentum(b, rest)
        exact = boost_energy(b, rest, p)
        assert abs(nonrel_energy(b.v, p, C) - exact) / exact < 1e-8

    def test_fourth_order_error(self):
        assert abs(nonrel_slope() - 4.0) <= 0.1

    def test_rejects_luminal(self):
        with pytest.raises(ValueError):
            nonrel_energy(10.0, 1.0, C)

    @settings(max_examples=300)
    @given(v=st.floats(-9.99, 9.99), p=st.floats(-1e3, 1e3))
    def test_doppler_frequency_is_energy_over_hbar(self, v, p):
        assert C.hbar * omega(Doppler(v), p / C.hbar, C) == nonrel_energy(v, p, C)

    @given(v=st.floats(-2.0, 2.0), p=st.floats(-50, 50), hbar=st.floats(0.05, 20))
    def test_doppler_identity_any_hbar(self, v, p, hbar):
        c = PhysicalConstants(hbar=hbar, m0=1.0, c=10.0)
        lhs = hbar * omega(Doppler(v), p / hbar, c)
        assert lhs == pytest.approx(nonrel_energy(v, p, c), rel=1e-14, abs=1e-12)
