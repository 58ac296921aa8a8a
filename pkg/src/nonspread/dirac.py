"""
Positive-energy Dirac plane-wave spinors in the Dirac representation.

beta = diag(1, 1, -1, -1) and alpha_i = [[0, sigma_i], [sigma_i, 0]].
States are simultaneous eigenvectors of H_D = c alpha.p + m0 c^2 beta and
of the helicity Sigma.p_hat.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import PhysicalConstants
from .kinematics import FrameBoost, FourMomentum, _vec3, boost_energy, gamma


class DiracIdentityError(ArithmeticError):
    """An expectation-value identity failed beyond its tolerance."""


SIGMA = np.array([
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
], dtype=complex)

_ZERO2 = np.zeros((2, 2), dtype=complex)
_I2 = np.eye(2, dtype=complex)

BETA = np.block([[_I2, _ZERO2], [_ZERO2, -_I2]])
ALPHA = np.array([np.block([[_ZERO2, s], [s, _ZERO2]]) for s in SIGMA])
SPIN = np.array([np.block([[s, _ZERO2], [_ZERO2, s]]) for s in SIGMA])


def dirac_energy(p, consts: PhysicalConstants) -> float:
    """E_D = sqrt(p^2 c^2 + m0^2 c^4)."""
    p = np.asarray(p, dtype=float)
    return float(np.hypot(np.linalg.norm(p) * consts.c, consts.m0 * consts.c**2))


def hamiltonian(p, consts: PhysicalConstants) -> np.ndarray:
    p = _vec3(p)
    return consts.c * np.einsum("i,ijk->jk", p, ALPHA) + consts.m0 * consts.c**2 * BETA


def _direction(p: np.ndarray) -> np.ndarray:
    """Unit vector along p, +z at p = 0. Pre-scaled so tiny |p| does not underflow."""
    big = np.max(np.abs(p))
    if big == 0:
        return np.array([0.0, 0.0, 1.0])
    q = p / big
    return q / np.linalg.norm(q)


def helicity_operator(p) -> np.ndarray:
    """Sigma.p_hat; +z at p = 0."""
    return np.einsum("i,ijk->jk", _direction(_vec3(p)), SPIN)


def _two_spinor(p: np.ndarray, s: int) -> np.ndarray:
    n = _direction(p)
    theta = np.arctan2(np.hypot(n[0], n[1]), n[2])
    phi = np.arctan2(n[1], n[0])
    if s == 1:
        return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])
    return np.array([-np.exp(-1j * phi) * np.sin(theta / 2), np.cos(theta / 2)])


@dataclass(frozen=True, eq=False)
class DiracState:
    """Normalised positive-energy helicity eigenstate |E_D, s>."""

    p: np.ndarray
    s: int
    spinor: np.ndarray
    consts: PhysicalConstants

    @property
    def energy(self) -> float:
        return dirac_energy(self.p, self.consts)

    def residuals(self) -> dict:
        """Norm, helicity and energy eigen-equation residuals."""
        u = self.spinor
        E = self.energy
        return {
            "norm": abs(np.vdot(u, u).real - 1.0),
            "helicity": float(np.linalg.norm(helicity_operator(self.p) @ u - self.s * u)),
            "energy": float(np.linalg.norm(hamiltonian(self.p, self.consts) @ u - E * u) / E),
        }


def make_dirac_state(p, s: int, consts: PhysicalConstants | None = None) -> DiracState:
    """
    Build u = N (chi_s, c sigma.p chi_s / (E_D + m0 c^2)), N = sqrt((E_D + m0 c^2) / 2 E_D).

    chi_s is the two-component helicity eigenspinor along p (along +z when
    p = 0), so at rest s = +1 gives (1, 0, 0, 0).
    """
    if s not in (1, -1):
        raise ValueError(f"helicity must be +1 or -1, got {s!r}")
    consts = consts or PhysicalConstants()
    p = _vec3(p)
    mc2 = consts.m0 * consts.c**2
    E = dirac_energy(p, consts)
    chi = _two_spinor(p, s)
    sigma_p = np.einsum("i,ijk->jk", p, SIGMA)
    lower = consts.c * (sigma_p @ chi) / (E + mc2)
    u = np.sqrt((E + mc2) / (2 * E)) * np.concatenate([chi, lower])
    u.flags.writeable = False
    state = DiracState(p, s, u, consts)
    res = state.residuals()
    if res["norm"] > 1e-12 or res["helicity"] > 1e-10 or res["energy"] > 1e-10:
        raise DiracIdentityError(f"spinor construction failed: {res}")
    return state


def expect_alpha(u: DiracState) -> np.ndarray:
    """<u| c alpha |u>, the velocity c^2 p / E_D."""
    v = u.spinor
    return u.consts.c * np.array([np.vdot(v, a @ v).real for a in ALPHA])


def expect_beta(u: DiracState) -> float:
    """<u| beta |u> = m0 c^2 / E_D = 1/gamma."""
    v = u.spinor
    return float(np.vdot(v, BETA @ v).real)


def dirac_energy_identity(u: DiracState, rtol: float = 1e-10) -> float:
    """
    Assemble E = <c alpha>.p + <beta> m0 c^2.

    Raises :class:`DiracIdentityError` if the result differs from E_D by
    more than ``rtol`` relative.
    """
    c = u.consts
    E = float(np.dot(expect_alpha(u), u.p) + expect_beta(u) * c.m0 * c.c**2)
    if abs(E - u.energy) > rtol * u.energy:
        raise DiracIdentityError(f"<H_D> = {E!r} but E_D = {u.energy!r}")
    return E


def correspondence_energy(u: DiracState) -> float:
    """Frame-boost energy v.p + m0 c^2 / gamma with v = <c alpha>."""
    b = FrameBoost(expect_alpha(u), u.consts.c)
    rest = FourMomentum(u.consts.m0 * u.consts.c**2, np.zeros(3))
    return boost_energy(b, rest, u.p)


def beta_gamma_product(u: DiracState) -> float:
    """<beta> * gamma(<c alpha>); equals one."""
    return expect_beta(u) * gamma(FrameBoost(expect_alpha(u), u.consts.c))
