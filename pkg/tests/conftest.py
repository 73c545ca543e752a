import numpy as np
import pytest
from scipy.integrate import quad

from dirac1d.models import Grid, SpinorField
from dirac1d.wavepackets import (
    make_gauss10,
    make_gauss11,
    make_gauss11_boosted,
    make_posneg_pair,
)

CANONICAL = {
    "gauss11": make_gauss11,
    "gauss11_boosted": make_gauss11_boosted,
    "gauss10": make_gauss10,
    "posneg_pair": make_posneg_pair,
}


@pytest.fixture(scope="session")
def grid():
    return Grid()


@pytest.fixture(scope="session")
def small_grid():
    return Grid(256, 32.0)


@pytest.fixture(scope="session")
def gauss11(grid):
    return make_gauss11(grid)


@pytest.fixture(scope="session")
def gauss10(grid):
    return make_gauss10(grid)


@pytest.fixture(scope="session")
def boosted(grid):
    return make_gauss11_boosted(grid)


@pytest.fixture(scope="session")
def posneg(grid):
    return make_posneg_pair(grid)


@pytest.fixture(scope="session", params=sorted(CANONICAL))
def canonical(request, grid):
    return request.param, CANONICAL[request.param](grid)


def random_field(grid: Grid, seed: int) -> SpinorField:
    rng = np.random.default_rng(seed)
    values = rng.normal(size=(2, grid.n)) + 1j * rng.normal(size=(2, grid.n))
    return SpinorField(grid, values)


def pair_velocity_oracle() -> float:
    """<p/lambda> of the positive-energy constituent of the posneg pair."""

    def weight(p):
        return np.exp(-8 * (p - 0.8) ** 2) * 0.5 * (1 + 1 / np.sqrt(1 + p * p))

    numerator = quad(lambda p: weight(p) * p / np.sqrt(1 + p * p), -np.inf, np.inf)[0]
    return numerator / quad(weight, -np.inf, np.inf)[0]
