import numpy as np
import pytest

from scsa.signals import generate, make_grid

# the reference setup used throughout: sech^2(x - 6) on [0, 15], 512 points
A, B, M = 0.0, 15.0, 512
X0 = 6.0


@pytest.fixture(scope="session")
def grid():
    return make_grid(A, B, M)


@pytest.fixture(scope="session")
def sech2(grid):
    return generate("sech2", grid, x0=X0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_symmetric(rng, n, scale=1.0):
    a = rng.standard_normal((n, n)) * scale
    return 0.5 * (a + a.T)
