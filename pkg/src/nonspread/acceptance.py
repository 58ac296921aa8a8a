"""
Acceptance checks for the library, runnable from tests and from ``selftest``.

Every check uses the reference setup: n = 1024 on [-40, 40), hbar = m0 = 1,
c = 10, a Gaussian with x0 = 0, a = 1, p_x = 1, and frame velocity v = 1.
Each returns a :class:`CriterionResult` holding the worst measured error
and the tolerance it was held to.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .core import (Doppler, GaussianParams, PhysicalConstants, Quadratic,
                   gaussian_packet, make_grid, omega)
from .diagnostics import compare, observables
from .dirac import (dirac_energy, expect_alpha, expect_beta, make_dirac_state)
from .kinematics import (FrameBoost, FourMomentum, boost, boost_energy,
                         boost_momentum, gamma, nonrel_energy, rest_frame)
from .oracles import GaussianEvolution, gaussian_evolved, rigid_translation
from .propagator import (convolution_valid, propagate_convolution,
                         propagate_spectral)

CONSTS = PhysicalConstants(hbar=1.0, m0=1.0, c=10.0)
PARAMS = GaussianParams(x0=0.0, a=1.0, p_x=1.0)
V = 1.0


def reference_grid():
    return make_grid(1024, -40.0, 40.0)


def reference_packet():
    return gaussian_packet(reference_grid(), PARAMS, CONSTS)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    measured: float
    tolerance: float
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  ({self.detail})" if self.detail else ""
        return (f"[{status}] {self.number}. {self.name}: "
                f"worst {self.measured:.3e} vs tol {self.tolerance:.1e}{extra}")


def _result(number, name, errors, tol, detail="") -> CriterionResult:
    worst = float(np.max(errors))
    return CriterionResult(number, name, worst, tol, bool(worst < tol), detail)


def spreading_law() -> CriterionResult:
    """Numerical width^2 under quadratic dispersion against (a^2 + hbar^2 t^2 / m0^2 a^2)/2."""
    w = reference_packet()
    a, hbar, m0 = PARAMS.a, CONSTS.hbar, CONSTS.m0
    errs = []
    for t in (0.0, 1.0, 2.0, 5.0):
        var = observables(propagate_spectral(w, Quadratic(), t)).var_x
        expected = (a**2 + (hbar * t / (m0 * a)) ** 2) / 2
        errs.append(abs(var / expected - 1))
    return _result(1, "Gaussian spreading law", errs, 1e-5, "t in {0,1,2,5}")


def closed_form_agreement() -> CriterionResult:
    w = reference_packet()
    t = 2.0
    num = propagate_spectral(w, Quadratic(), t)
    exact = w.replace(gaussian_evolved(GaussianEvolution(PARAMS, CONSTS), w.grid.x, t))
    err = np.linalg.norm(num.samples - exact.samples) / np.linalg.norm(exact.samples)
    return _result(2, "closed-form evolved Gaussian", [err], 1e-8, "t = 2")


def cross_method() -> CriterionResult:
    w = reference_packet()
    t = 1.0
    inside = convolution_valid(w.grid, t, CONSTS)
    err = compare(propagate_spectral(w, Quadratic(), t), propagate_convolution(w, t)).l2_relative_error
    res = _result(3, "convolution vs spectral", [err], 1e-3, f"t = 1, inside window: {inside}")
    if not inside:
        return CriterionResult(3, res.name, res.measured, res.tolerance, False, res.detail)
    return res


def headline_theorem() -> CriterionResult:
    """Doppler spectral propagation equals phase * psi0(x - v t); density moves undeformed."""
    w = reference_packet()
    g = w.grid
    errs, dens = [], []
    for t in (0.5, 1.0, 3.7):
        prop = propagate_spectral(w, Doppler(V), t)
        errs.append(np.max(np.abs(prop.samples - rigid_translation(w, V, t).samples)))
        moved = GaussianParams(PARAMS.x0 + V * t, PARAMS.a, PARAMS.p_x)
        dens.append(np.max(np.abs(prop.density - gaussian_packet(g, moved, CONSTS).density)))
    worst = max(errs + dens)
    return CriterionResult(4, "Doppler propagation is rigid translation", worst, 1e-10,
                           worst < 1e-10,
                           f"amplitude {max(errs):.1e}, density {max(dens):.1e}; t in {{0.5,1,3.7}}")


def unitarity_and_group() -> CriterionResult:
    w = reference_packet()
    n0 = w.norm()
    drift, comp = [], []
    for d in (Quadratic(), Doppler(V)):
        for t in (0.5, 1.0, 3.7, -2.0):
            drift.append(abs(propagate_spectral(w, d, t).norm() / n0 - 1))
        t1, t2 = 1.3, 2.1
        two = propagate_spectral(propagate_spectral(w, d, t1), d, t2)
        one = propagate_spectral(w, d, t1 + t2)
        comp.append(np.max(np.abs(two.samples - one.samples)))
    ok = max(drift) < 1e-12 and max(comp) < 1e-11
    return CriterionResult(5, "unitarity and group property", max(max(drift) / 1e-12, max(comp) / 1e-11),
                           1.0, ok,
                           f"norm drift {max(drift):.1e} (tol 1e-12), "
                           f"composition {max(comp):.1e} (tol 1e-11); measured as fraction of tol")


def dirac_identities(samples: int = 100, pmax: float = 10.0, seed: int = 0) -> CriterionResult:
    """Random momenta with |p| <= pmax m0 c; relative residuals of the three expectation identities."""
    rng = np.random.default_rng(seed)
    c, m0 = CONSTS.c, CONSTS.m0
    worst = []
    for _ in range(samples):
        direction = rng.normal(size=3)
        direction /= np.linalg.norm(direction)
        p = direction * rng.uniform(0, pmax * m0 * c)
        for s in (1, -1):
            u = make_dirac_state(p, s, CONSTS)
            E = dirac_energy(p, CONSTS)
            v = expect_alpha(u)
            v_exact = c**2 * p / E
            r_alpha = np.linalg.norm(v - v_exact) / max(np.linalg.norm(v_exact), c * 1e-12)
            inv_gamma = 1.0 / gamma(FrameBoost(v_exact, c))
            r_beta = abs(expect_beta(u) - inv_gamma) / inv_gamma
            assembled = np.dot(v, p) + expect_beta(u) * m0 * c**2
            r_energy = abs(assembled - E) / E
            worst.append(max(r_alpha, r_beta, r_energy))
    return _result(6, "Dirac expectation identities", worst, 1e-10,
                   f"{samples} momenta x 2 helicities, |p| <= {pmax} m0 c")


def nonrel_error(beta: float) -> float:
    """|nonrel_energy - exact| for a particle at rest in a frame moving at beta c."""
    b = FrameBoost(beta * CONSTS.c, CONSTS.c)
    rest = rest_frame(CONSTS)
    p = boost_momentum(b, rest)
    exact = boost_energy(b, rest, p)
    return abs(nonrel_energy(b.v, p, CONSTS) - exact)


def nonrel_slope() -> float:
    betas = np.logspace(-3, -1, 9)
    errs = [nonrel_error(b) for b in betas]
    return float(np.polyfit(np.log(betas), np.log(errs), 1)[0])


def kinematics_consistency(seed: int = 0) -> CriterionResult:
    rng = np.random.default_rng(seed)
    c = CONSTS.c
    trip = []
    for _ in range(1000):
        direction = rng.normal(size=3)
        direction /= np.linalg.norm(direction)
        b = FrameBoost(direction * rng.uniform(0, 0.99 * c), c)
        m0 = rng.uniform(0.1, 10)
        p0 = rng.normal(size=3) * m0 * c
        E0 = np.sqrt(np.dot(p0, p0) * c**2 + (m0 * c**2) ** 2)
        start = FourMomentum(E0, p0)
        back = boost(b.inverse(), boost(b, start))
        scale = max(abs(E0), np.linalg.norm(p0) * c)
        trip.append(max(abs(back.E - E0) / scale, np.linalg.norm(back.p - p0) * c / scale))
    slope = nonrel_slope()
    ks = rng.uniform(-50, 50, size=200)
    vs = rng.uniform(-0.9 * c, 0.9 * c, size=200)
    exact_match = all(
        CONSTS.hbar * omega(Doppler(v), k / CONSTS.hbar, CONSTS) == nonrel_energy(v, k, CONSTS)
        for v, k in zip(vs, ks))
    ok = max(trip) < 1e-12 and abs(slope - 4.0) <= 0.1 and exact_match
    return CriterionResult(7, "kinematics consistency", max(trip), 1e-12, ok,
                           f"round trip worst {max(trip):.1e} (tol 1e-12), "
                           f"slope {slope:.4f} (4.0 +/- 0.1), hbar*omega == E exactly: {exact_match}")


CRITERIA = (spreading_law, closed_form_agreement, cross_method, headline_theorem,
            unitarity_and_group, dirac_identities, kinematics_consistency)


def run_all(echo=print) -> tuple[list[CriterionResult], float]:
    """Run every check; returns the results and the wall time in seconds."""
    start = time.perf_counter()
    results = []
    for check in CRITERIA:
        res = check()
        results.append(res)
        if echo:
            echo(res.line())
    return results, time.perf_counter() - start
