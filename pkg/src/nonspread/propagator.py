"""
Free evolution of a :class:`WavePacket` by two independent routes.

``propagate_spectral`` multiplies the discrete spectrum by exp(-i omega(k) t)
and is the production path. ``propagate_convolution`` sums the free-particle
kernel directly against the samples on the grid; it never touches an FFT and
exists to cross-check the spectral route.

Transform convention: the unitary DFT pair (numpy ``norm="ortho"``). The
continuum prefactor (2 pi hbar)^(-1/2) is not carried into the bins;
observables are always weighted by dx, so they do not depend on it.
Boundary conditions are periodic, as implied by the DFT.
"""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import (DispersionRelation, Doppler, Grid1D, PhysicalConstants,
                   Quadratic, SpectralAmplitude, WavePacket, omega)


class AliasingWarning(UserWarning):
    """Convolution kernel phase is under-sampled somewhere on the grid."""


class Method(str, enum.Enum):
    SPECTRAL = "spectral"
    CONVOLUTION = "convolution"


@dataclass(frozen=True, eq=False)
class PropagationResult:
    times: tuple
    snapshots: tuple
    method: Method
    dispersion: DispersionRelation

    def __post_init__(self):
        if len(self.times) != len(self.snapshots):
            raise ValueError("one snapshot per time required")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise ValueError("times must be strictly increasing")

    def __len__(self):
        return len(self.times)


def to_spectral(w: WavePacket) -> SpectralAmplitude:
    return SpectralAmplitude(w.grid, np.fft.fft(w.samples, norm="ortho"), w.constants)


def from_spectral(s: SpectralAmplitude) -> WavePacket:
    return WavePacket(s.grid, np.fft.ifft(s.samples, norm="ortho"), s.constants)


def propagate_spectral(w: WavePacket, d: DispersionRelation, t: float) -> WavePacket:
    """
    Evolve ``w`` to time ``t`` in a single exact step.

    Negative ``t`` runs the evolution backwards. The discrete norm is
    conserved to round-off because every factor has unit modulus.
    """
    if not np.isfinite(t):
        raise ValueError(f"t must be finite, got {t!r}")
    phi = to_spectral(w)
    phase = np.exp(-1j * omega(d, phi.k, w.constants) * t)
    return from_spectral(SpectralAmplitude(phi.grid, phi.samples * phase, phi.constants))


def _kernel_prefactor(t: float, consts: PhysicalConstants) -> complex:
    # principal branch of (m0 / 2 pi i hbar t)^(1/2); conjugate for t < 0
    mag = np.sqrt(consts.m0 / (2 * np.pi * consts.hbar * abs(t)))
    return mag * np.exp(-1j * np.pi / 4 * np.sign(t))


def free_kernel(x, t: float, consts: PhysicalConstants):
    """(m0 / 2 pi i hbar t)^(1/2) exp(i m0 x^2 / 2 hbar t)."""
    if t == 0:
        raise ValueError("the free kernel is a Dirac delta at t = 0 and cannot be sampled")
    x = np.asarray(x, dtype=float)
    return _kernel_prefactor(t, consts) * np.exp(1j * consts.m0 * x**2 / (2 * consts.hbar * t))


def kernel_phase_step(grid: Grid1D, t: float, consts: PhysicalConstants) -> float:
    """
    Kernel phase increment across one dx at separation half the domain.

    The phase of the kernel is m0 x^2 / 2 hbar t, so its increment per
    sample at separation x is about m0 x dx / hbar |t|.
    """
    half = grid.length / 2
    return consts.m0 * half * grid.dx / (consts.hbar * abs(t))


def convolution_valid(grid: Grid1D, t: float, consts: PhysicalConstants) -> bool:
    """True when the convolution quadrature is inside its validity window."""
    return t != 0 and kernel_phase_step(grid, t, consts) < np.pi


def min_valid_time(grid: Grid1D, consts: PhysicalConstants) -> float:
    """Smallest |t| for which :func:`convolution_valid` holds."""
    return consts.m0 * (grid.length / 2) * grid.dx / (consts.hbar * np.pi)


def propagate_convolution(w: WavePacket, t: float,
                          consts: PhysicalConstants | None = None) -> WavePacket:
    """
    psi(x_i, t) = sum_j G(x_i - x_j, t) psi(x_j, 0) dx on the open line.

    Quadratic dispersion only. No periodic images are summed, so the result
    matches the spectral route only while the packet stays clear of the
    edges. Emits :class:`AliasingWarning` outside the validity window, in
    which case the result is computed but should not be trusted.
    """
    consts = consts or w.constants
    if t == 0:
        raise ValueError("t = 0: the free kernel degenerates to a Dirac delta")
    if not np.isfinite(t):
        raise ValueError(f"t must be finite, got {t!r}")
    g = w.grid
    if not convolution_valid(g, t, consts):
        warnings.warn(
            f"kernel phase step {kernel_phase_step(g, t, consts):.3g} rad per sample exceeds pi "
            f"at t={t}; quadrature is aliased (|t| >= {min_valid_time(g, consts):.3g} needed)",
            AliasingWarning, stacklevel=2)
    n = g.n
    # kernel on separations (m - (n-1)) dx, m = 0 .. 2n-2
    seps = (np.arange(2 * n - 1) - (n - 1)) * g.dx
    kern = free_kernel(seps, t, consts)
    # row i holds G((i - j) dx) for j = 0..n-1, a strided view of kern reversed
    rows = np.lib.stride_tricks.sliding_window_view(kern[::-1], n)[::-1]
    psi = rows @ w.samples * g.dx
    return WavePacket(g, psi, w.constants)


def propagate(w: WavePacket, d: DispersionRelation, t: float,
              method: Method | str = Method.SPECTRAL) -> WavePacket:
    """Single step by either method. t = 0 returns the input for both."""
    method = Method(method)
    if method is Method.SPECTRAL:
        return propagate_spectral(w, d, t)
    if not isinstance(d, Quadratic):
        raise ValueError("convolution is only defined for the quadratic dispersion relation")
    if t == 0:
        return w
    return propagate_convolution(w, t)


def propagate_schedule(w: WavePacket, d: DispersionRelation, times: Sequence[float],
                       method: Method | str = Method.SPECTRAL) -> PropagationResult:
    """
    One snapshot per entry of ``times``, each a single step from t = 0.

    Snapshots are never chained, so round-off does not accumulate along
    the schedule.
    """
    method = Method(method)
    times = tuple(float(t) for t in times)
    if any(b <= a for a, b in zip(times, times[1:])):
        raise ValueError(f"times must be strictly increasing, got {times}")
    if isinstance(d, Doppler):
        d.check(w.constants)
    snaps = tuple(propagate(w, d, t, method) for t in times)
    return PropagationResult(times, snaps, method, d)
