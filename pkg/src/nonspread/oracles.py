"""
Closed-form reference solutions for free evolution.

These are evaluated pointwise and never go through the discrete transform,
except :func:`rigid_translation` which needs a band-limited shift for
translations that are not a whole number of grid cells.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import Doppler, GaussianParams, PhysicalConstants, WavePacket
from .propagator import free_kernel


@dataclass(frozen=True)
class GaussianEvolution:
    params: GaussianParams
    consts: PhysicalConstants = field(default_factory=PhysicalConstants)

    def _scale(self) -> float:
        # the closed form assumes the unit-norm amplitude; rescale otherwise
        a = self.params.a
        return self.params.A / (np.pi ** -0.25 * a ** -0.5)

    def width_sq(self, t):
        """a^2 + hbar^2 t^2 / m0^2 a^2."""
        a, c = self.params.a, self.consts
        return a**2 + (c.hbar * t / (c.m0 * a)) ** 2

    def centre(self, t):
        return self.params.x0 + self.params.p_x * t / self.consts.m0


def gaussian_evolved(ge: GaussianEvolution, x, t):
    """
    psi(x, t) for the Gaussian initial state under quadratic dispersion.

    The envelope carries (1 - i hbar t / m0 a^2) in its numerator; this is
    the form that reduces to the initial state at t = 0 and that the
    spectral propagator reproduces.
    """
    p, c = ge.params, ge.consts
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    a, hbar, m0 = p.a, c.hbar, c.m0
    pref = np.pi ** -0.25 * (a + 1j * hbar * t / (m0 * a)) ** -0.5
    carrier = np.exp(1j * p.p_x * x / hbar - 1j * p.p_x**2 * t / (2 * m0 * hbar))
    shift = x - ge.centre(t)
    envelope = np.exp(-shift**2 * (1 - 1j * hbar * t / (m0 * a**2)) / (2 * ge.width_sq(t)))
    return ge._scale() * pref * carrier * envelope


def gaussian_density(ge: GaussianEvolution, x, t):
    """|psi(x, t)|^2: a Gaussian of variance width_sq(t)/2 centred at x0 + p_x t / m0."""
    x = np.asarray(x, dtype=float)
    w2 = ge.width_sq(np.asarray(t, dtype=float))
    return ge._scale() ** 2 * np.pi ** -0.5 * w2 ** -0.5 * np.exp(-(x - ge.centre(t)) ** 2 / w2)


def green_function_1d(x, t: float, consts: PhysicalConstants | None = None):
    """
    Free-particle propagator on the line.

    Principal square-root branch, so for t > 0 the prefactor is
    exp(-i pi/4) (m0 / 2 pi hbar t)^(1/2); t < 0 takes the conjugate.
    Raises ``ValueError`` at t = 0 where the kernel is a delta function.
    """
    return free_kernel(x, t, consts or PhysicalConstants())


def translation_phase(v: float, t: float, consts: PhysicalConstants) -> complex:
    """exp[i(omega' v^2 / 2c^2 - omega') t], the global phase of a rigid translation."""
    w = consts.rest_frequency
    return np.exp(1j * (w * v**2 / (2 * consts.c**2) - w) * t)


def rigid_translation(w0: WavePacket, v: float, t: float,
                      consts: PhysicalConstants | None = None) -> WavePacket:
    """
    phase(v, t) * psi0(x - v t), periodic on the grid.

    The shift multiplies the spectrum by exp(-i k v t), which is exact for
    band-limited samples and handles shifts that are not whole cells.
    """
    consts = consts or w0.constants
    Doppler(v).check(consts)
    g = w0.grid
    phi = np.fft.fft(w0.samples)
    shifted = np.fft.ifft(phi * np.exp(-1j * g.k * (v * t)))
    return WavePacket(g, translation_phase(v, t, consts) * shifted, w0.constants)


def cyclic_shift(w0: WavePacket, bins: int) -> WavePacket:
    """psi0 moved right by a whole number of cells, with wraparound."""
    return w0.replace(np.roll(w0.samples, bins))
