"""
Frame velocity from the Dirac equation
======================================

For a positive-energy helicity state the expectation of c alpha is the
velocity c^2 p / E_D and the expectation of beta is 1/gamma. Feeding that
velocity into the boosted rest energy v.p + m0 c^2 / gamma gives E_D back.
"""
import numpy as np

from nonspread import (PhysicalConstants, dirac_energy_identity, expect_alpha,
                       expect_beta, gamma, FrameBoost, make_dirac_state)
from nonspread.dirac import correspondence_energy

consts = PhysicalConstants(c=10.0)
print(f"{'|p|':>8} {'s':>3} {'|<c alpha>|':>12} {'<beta>':>10} {'1/gamma':>10} {'E_D':>12} {'v.p+mc^2/g':>12}")
for mag in [0.0, 1.0, 10.0, 50.0, 100.0]:
    p = mag * np.array([0.6, 0.0, 0.8])
    for s in (1, -1):
        u = make_dirac_state(p, s, consts)
        v = expect_alpha(u)
        g = gamma(FrameBoost(v, consts.c))
        print(f"{mag:8.2f} {s:+3d} {np.linalg.norm(v):12.8f} {expect_beta(u):10.8f} {1 / g:10.8f} "
              f"{dirac_energy_identity(u):12.6f} {correspondence_energy(u):12.6f}")
