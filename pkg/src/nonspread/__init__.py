"""
Free quantum wave packets under quadratic and Doppler dispersion.

The quadratic relation omega = hbar k^2 / 2 m0 spreads a packet; the
Doppler relation omega = v k - (omega'/2)(v/c)^2 + omega' is linear in k and
moves it rigidly at the frame velocity v.
"""
from .core import (ContainmentWarning, Doppler, GaussianParams, Grid1D,
                   PhysicalConstants, Quadratic, SpectralAmplitude, WavePacket,
                   gaussian_packet, group_velocity, make_grid, omega)
from .diagnostics import Comparison, PacketObservables, compare, observables
from .dirac import (DiracState, dirac_energy_identity, expect_alpha,
                    expect_beta, make_dirac_state)
from .kinematics import (FourMomentum, FrameBoost, boost, boost_energy,
                         boost_momentum, gamma, nonrel_energy)
from .oracles import (GaussianEvolution, gaussian_density, gaussian_evolved,
                      green_function_1d, rigid_translation)
from .output import emit_csv
from .propagator import (AliasingWarning, Method, PropagationResult,
                         from_spectral, propagate_convolution,
                         propagate_schedule, propagate_spectral, to_spectral)

__version__ = "0.1.0"
