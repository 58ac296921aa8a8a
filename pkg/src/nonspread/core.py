"""
Grids, physical constants, packet containers and dispersion relations.

Everything here is immutable after construction. Sample arrays are stored
as read-only numpy views so containers can be shared freely.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Union

import numpy as np


class ContainmentWarning(UserWarning):
    """A packet is too narrow for the grid or too close to its edges."""


@dataclass(frozen=True)
class PhysicalConstants:
    """Unit system. Defaults are hbar = m0 = 1 and c = 10."""

    hbar: float = 1.0
    m0: float = 1.0
    c: float = 10.0

    def __post_init__(self):
        for name in ("hbar", "m0", "c"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0:
                raise ValueError(f"{name} must be positive and finite, got {value!r}")

    @property
    def rest_frequency(self) -> float:
        """omega' = m0 c^2 / hbar."""
        return self.m0 * self.c**2 / self.hbar


def _is_power_of_two(n) -> bool:
    return isinstance(n, (int, np.integer)) and n > 0 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class Grid1D:
    """
    Uniform periodic grid of ``n`` samples starting at ``x_min``.

    The conjugate wavenumbers follow the usual FFT ordering,
    ``k_j = 2 pi f_j / (n dx)`` with ``f = 0, 1, ..., n/2 - 1, -n/2, ..., -1``.
    """

    n: int
    dx: float
    x_min: float

    def __post_init__(self):
        if not _is_power_of_two(self.n) or self.n < 8:
            raise ValueError(f"n must be a power of two >= 8, got {self.n!r}")
        if not np.isfinite(self.dx) or self.dx <= 0:
            raise ValueError(f"dx must be positive, got {self.dx!r}")
        if not np.isfinite(self.x_min):
            raise ValueError(f"x_min must be finite, got {self.x_min!r}")

    @property
    def length(self) -> float:
        return self.n * self.dx

    @property
    def x_max(self) -> float:
        """Right edge of the periodic cell (not itself a sample point)."""
        return self.x_min + self.length

    @property
    def x(self) -> np.ndarray:
        return self.x_min + self.dx * np.arange(self.n)

    @property
    def k(self) -> np.ndarray:
        return 2 * np.pi * np.fft.fftfreq(self.n, d=self.dx)

    @property
    def dk(self) -> float:
        return 2 * np.pi / self.length


def make_grid(n: int, x_min: float, x_max: float) -> Grid1D:
    """Grid with ``n`` samples covering the periodic cell ``[x_min, x_max)``."""
    if not (np.isfinite(x_min) and np.isfinite(x_max)) or x_max <= x_min:
        raise ValueError(f"degenerate interval [{x_min!r}, {x_max!r}]")
    if not _is_power_of_two(n) or n < 8:
        raise ValueError(f"n must be a power of two >= 8, got {n!r}")
    return Grid1D(n=int(n), dx=(x_max - x_min) / n, x_min=float(x_min))


def _frozen_samples(grid: Grid1D, samples) -> np.ndarray:
    arr = np.array(samples, dtype=np.complex128)
    if arr.shape != (grid.n,):
        raise ValueError(f"expected {grid.n} samples, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("samples must be finite")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class WavePacket:
    """Position-space samples psi(x_j) on ``grid``."""

    grid: Grid1D
    samples: np.ndarray
    constants: PhysicalConstants = field(default_factory=PhysicalConstants)

    def __post_init__(self):
        object.__setattr__(self, "samples", _frozen_samples(self.grid, self.samples))

    @property
    def x(self) -> np.ndarray:
        return self.grid.x

    @property
    def density(self) -> np.ndarray:
        return np.abs(self.samples) ** 2

    def norm(self) -> float:
        """Discrete L2 norm squared, sum |psi_j|^2 dx."""
        return float(np.sum(self.density) * self.grid.dx)

    def replace(self, samples) -> "WavePacket":
        return WavePacket(self.grid, samples, self.constants)


@dataclass(frozen=True, eq=False)
class SpectralAmplitude:
    """Samples of phi(k_j) in FFT order; see :func:`nonspread.propagator.to_spectral`."""

    grid: Grid1D
    samples: np.ndarray
    constants: PhysicalConstants = field(default_factory=PhysicalConstants)

    def __post_init__(self):
        object.__setattr__(self, "samples", _frozen_samples(self.grid, self.samples))

    @property
    def k(self) -> np.ndarray:
        return self.grid.k


# -- dispersion relations ---------------------------------------------------

@dataclass(frozen=True)
class Quadratic:
    """omega(k) = hbar k^2 / 2 m0. Spreads packets."""

    kind = "quadratic"


@dataclass(frozen=True)
class Doppler:
    """
    omega(k) = v k - (omega'/2)(v/c)^2 + omega', omega' = m0 c^2 / hbar.

    Linear in k, so every component travels at the frame velocity ``v`` and
    the packet translates rigidly. ``v`` is an input in its own right and is
    never inferred from the packet momentum.
    """

    v: float
    kind = "doppler"

    def __post_init__(self):
        if not np.isfinite(self.v):
            raise ValueError(f"v must be finite, got {self.v!r}")

    def check(self, consts: PhysicalConstants) -> None:
        if abs(self.v) >= consts.c:
            raise ValueError(f"|v| must be below c = {consts.c}, got v = {self.v}")


DispersionRelation = Union[Quadratic, Doppler]


def doppler_energy(v, p, consts: PhysicalConstants):
    """E(p) = v.p - m0 v^2 / 2 + m0 c^2, the low-velocity rest-frame energy."""
    v = np.asarray(v, dtype=float)
    vp = v * p if v.ndim == 0 else np.dot(p, v)
    vv = v * v if v.ndim == 0 else np.dot(v, v)
    return vp - 0.5 * consts.m0 * vv + consts.m0 * consts.c**2


def omega(d: DispersionRelation, k, consts: PhysicalConstants):
    """Angular frequency of wavenumber ``k`` (scalar or array)."""
    k = np.asarray(k, dtype=float)
    if isinstance(d, Quadratic):
        return consts.hbar * k**2 / (2 * consts.m0)
    if isinstance(d, Doppler):
        d.check(consts)
        # same arithmetic as the energy form, so hbar*omega(p/hbar) == E(p)
        return doppler_energy(d.v, consts.hbar * k, consts) / consts.hbar
    raise TypeError(f"unknown dispersion relation {d!r}")


def group_velocity(d: DispersionRelation, k, consts: PhysicalConstants):
    """d omega / dk."""
    k = np.asarray(k, dtype=float)
    if isinstance(d, Quadratic):
        return consts.hbar * k / consts.m0
    if isinstance(d, Doppler):
        d.check(consts)
        return np.full_like(k, d.v)
    raise TypeError(f"unknown dispersion relation {d!r}")


# -- Gaussian initial state -------------------------------------------------

@dataclass(frozen=True)
class GaussianParams:
    """
    psi(x, 0) = A exp(-(x - x0)^2 / 2a^2) exp(i p_x x / hbar).

    With ``normalize`` the amplitude is (pi a^2)^(-1/4); otherwise
    ``amplitude`` is used as given.
    """

    x0: float = 0.0
    a: float = 1.0
    p_x: float = 0.0
    normalize: bool = True
    amplitude: float = 1.0

    def __post_init__(self):
        if not np.isfinite(self.a) or self.a <= 0:
            raise ValueError(f"width a must be positive, got {self.a!r}")
        for name in ("x0", "p_x", "amplitude"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def A(self) -> float:
        if self.normalize:
            return (np.pi * self.a**2) ** -0.25
        return self.amplitude


def gaussian_packet(g: Grid1D, p: GaussianParams,
                    consts: PhysicalConstants | None = None) -> WavePacket:
    """
    Sample the Gaussian initial state on ``g``.

    Warns with :class:`ContainmentWarning` when the packet is under-resolved
    (a < 4 dx) or sits within 5a of an edge; the periodic grid then wraps it.
    """
    consts = consts or PhysicalConstants()
    if p.a < 4 * g.dx:
        warnings.warn(f"width a={p.a} is under-resolved by dx={g.dx}", ContainmentWarning,
                      stacklevel=2)
    if p.x0 - g.x_min < 5 * p.a or g.x_max - p.x0 < 5 * p.a:
        warnings.warn(f"packet at x0={p.x0} is within 5a of the grid edges "
                      f"[{g.x_min}, {g.x_max})", ContainmentWarning, stacklevel=2)
    x = g.x
    psi = p.A * np.exp(-((x - p.x0) ** 2) / (2 * p.a**2)) * np.exp(1j * p.p_x * x / consts.hbar)
    return WavePacket(g, psi, consts)
