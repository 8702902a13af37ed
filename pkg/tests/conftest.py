import numpy as np
import pytest

from polyaspec import spectra as sp

SEED = 20240601

# covers all jump scans up to 1e4 and at least 10^3 eigenvalues per domain
ZOO_CUTOFF = 1.5001e4


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture(scope="session")
def unit_square_dirichlet():
    return sp.box_spectrum([1, 1], "dirichlet", ZOO_CUTOFF), sp.box_meta([1, 1], "dirichlet")


@pytest.fixture(scope="session")
def unit_square_neumann():
    return sp.box_spectrum([1, 1], "neumann", ZOO_CUTOFF), sp.box_meta([1, 1], "neumann")


@pytest.fixture(scope="session")
def unit_cube_dirichlet():
    return sp.box_spectrum([1, 1, 1], "dirichlet", ZOO_CUTOFF), sp.box_meta([1, 1, 1], "dirichlet")


@pytest.fixture(scope="session")
def unit_cube_neumann():
    return sp.box_spectrum([1, 1, 1], "neumann", ZOO_CUTOFF), sp.box_meta([1, 1, 1], "neumann")


@pytest.fixture(scope="session")
def box12_dirichlet():
    return sp.box_spectrum([1, 2], "dirichlet", ZOO_CUTOFF), sp.box_meta([1, 2], "dirichlet")


@pytest.fixture(scope="session")
def box12_neumann():
    return sp.box_spectrum([1, 2], "neumann", ZOO_CUTOFF), sp.box_meta([1, 2], "neumann")
