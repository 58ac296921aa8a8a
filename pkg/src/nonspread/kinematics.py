"""
Energy and momentum of a particle seen from a moving frame.

K' moves with velocity v relative to K. A boost takes the K' pair
(E', p') to the K pair (E, p)::

    p = p' + (gamma - 1)(p'.v / v^2) v + gamma (v / c^2) E'
    E = v.p + E' / gamma

Note that the energy formula uses the K-frame momentum ``p`` on the right
hand side together with the K'-frame energy. It is implemented as written.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import PhysicalConstants, doppler_energy


def _vec3(v) -> np.ndarray:
    arr = np.array(v, dtype=float)
    if arr.ndim == 0:
        arr = np.array([float(arr), 0.0, 0.0])
    if arr.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {arr.shape}")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class FrameBoost:
    """Velocity of K' relative to K. A scalar is taken along x."""

    v: np.ndarray
    c: float = 10.0

    def __post_init__(self):
        object.__setattr__(self, "v", _vec3(self.v))
        if not np.all(np.isfinite(self.v)):
            raise ValueError("v must be finite")
        if np.dot(self.v, self.v) >= self.c**2:
            raise ValueError(f"|v| must be below c = {self.c}, got {np.linalg.norm(self.v)}")

    @property
    def speed(self) -> float:
        return float(np.linalg.norm(self.v))

    def gamma(self) -> float:
        return gamma(self)

    def inverse(self) -> "FrameBoost":
        return FrameBoost(-self.v, self.c)


@dataclass(frozen=True, eq=False)
class FourMomentum:
    E: float
    p: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "p", _vec3(self.p))
        if not (np.isfinite(self.E) and np.all(np.isfinite(self.p))):
            raise ValueError("four-momentum components must be finite")

    def invariant_mass_sq(self, c: float) -> float:
        """E^2 - |p|^2 c^2."""
        return self.E**2 - np.dot(self.p, self.p) * c**2


def gamma(b: FrameBoost) -> float:
    """Lorentz factor (1 - v^2/c^2)^(-1/2)."""
    return 1.0 / np.sqrt(1.0 - np.dot(b.v, b.v) / b.c**2)


def boost_momentum(b: FrameBoost, m: FourMomentum) -> np.ndarray:
    v, c = b.v, b.c
    v2 = np.dot(v, v)
    if v2 == 0:
        return m.p + v / c**2 * m.E
    g = gamma(b)
    return m.p + (g - 1) * np.dot(m.p, v) / v2 * v + g * v / c**2 * m.E


def boost_energy(b: FrameBoost, m: FourMomentum, p=None) -> float:
    """
    E = v.p + E'/gamma.

    ``p`` is the K-frame momentum; when omitted it is obtained from
    :func:`boost_momentum`.
    """
    p = boost_momentum(b, m) if p is None else _vec3(p)
    return float(np.dot(b.v, p) + m.E / gamma(b))


def boost(b: FrameBoost, m: FourMomentum) -> FourMomentum:
    """(E', p') in K' to (E, p) in K."""
    p = boost_momentum(b, m)
    return FourMomentum(boost_energy(b, m, p), p)


def rest_frame(consts: PhysicalConstants) -> FourMomentum:
    """Particle at rest in K': E' = m0 c^2, p' = 0."""
    return FourMomentum(consts.m0 * consts.c**2, np.zeros(3))


def nonrel_energy(v, p, consts: PhysicalConstants):
    """
    v.p - m0 v^2 / 2 + m0 c^2, the rest-frame energy to second order in v/c.

    ``v`` and ``p`` may be scalars (motion along one axis) or 3-vectors.
    """
    v_arr = np.asarray(v, dtype=float)
    if np.sum(v_arr**2) >= consts.c**2:
        raise ValueError(f"|v| must be below c = {consts.c}")
    return doppler_energy(v, p, consts)
