"""
Two routes to the same free evolution
=====================================

``propagate_spectral`` multiplies the spectrum by a phase, while
``propagate_convolution`` sums the free kernel G(x - x', t) against the
samples directly. Both are compared with the closed-form evolved Gaussian.
The convolution quadrature is only trustworthy once the kernel phase step
per sample drops below pi, which on this grid means t > 0.995.
"""
import warnings

import numpy as np

from nonspread import (AliasingWarning, GaussianEvolution, GaussianParams,
                       PhysicalConstants, Quadratic, compare, gaussian_evolved,
                       gaussian_packet, make_grid, propagate_convolution,
                       propagate_spectral)
from nonspread.propagator import min_valid_time

consts = PhysicalConstants()
grid = make_grid(1024, -40.0, 40.0)
params = GaussianParams(x0=0.0, a=1.0, p_x=1.0)
psi0 = gaussian_packet(grid, params, consts)
exact = GaussianEvolution(params, consts)

print(f"convolution valid for |t| > {min_valid_time(grid, consts):.4f}\n")
print(f"{'t':>5} {'spectral vs exact':>18} {'conv vs spectral':>17}")
for t in [0.25, 0.5, 1.0, 2.0, 4.0]:
    spec = propagate_spectral(psi0, Quadratic(), t)
    ref = psi0.replace(gaussian_evolved(exact, grid.x, t))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AliasingWarning)
        conv = propagate_convolution(psi0, t)
    print(f"{t:5.2f} {compare(spec, ref).l2_relative_error:18.2e} "
          f"{compare(spec, conv).l2_relative_error:17.2e}")
