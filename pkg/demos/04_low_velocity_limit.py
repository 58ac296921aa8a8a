"""
Low-velocity limit of the boosted rest energy
=============================================

v.p - m0 v^2 / 2 + m0 c^2 differs from v.p + m0 c^2 / gamma by about
m0 c^2 (v/c)^4 / 8, so the error falls four decades per decade of v/c.
Divided by hbar it is exactly the Doppler dispersion relation.
"""
import numpy as np

from nonspread import Doppler, PhysicalConstants, nonrel_energy, omega
from nonspread.acceptance import nonrel_error, nonrel_slope

consts = PhysicalConstants()
for beta in np.logspace(-3, -1, 5):
    err = nonrel_error(beta)
    print(f"v/c = {beta:8.1e}   |error| = {err:10.3e}   m0 c^2 (v/c)^4 / 8 = {consts.m0 * consts.c**2 * beta**4 / 8:10.3e}")
print(f"\nlog-log slope: {nonrel_slope():.4f}")

v, p = 0.8, 2.5
print(f"\nhbar * omega_Doppler(p / hbar) = {consts.hbar * omega(Doppler(v), p / consts.hbar, consts)!r}")
print(f"nonrel_energy(v, p)            = {nonrel_energy(v, p, consts)!r}")
