import numpy as np
import pytest

from nonspread import GaussianParams, PhysicalConstants, gaussian_packet, make_grid


@pytest.fixture
def consts():
    return PhysicalConstants(hbar=1.0, m0=1.0, c=10.0)


@pytest.fixture
def grid():
    return make_grid(1024, -40.0, 40.0)


@pytest.fixture
def packet(grid, consts):
    return gaussian_packet(grid, GaussianParams(x0=0.0, a=1.0, p_x=1.0), consts)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
