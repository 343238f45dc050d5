import numpy as np
import pytest

from dirlap import (
    decompose,
    directed_laplacian,
    gen_directed_cycle,
    gen_perturbed_cycle,
)


@pytest.fixture(scope="session")
def cycle20():
    lap = directed_laplacian(gen_directed_cycle(20))
    return lap, decompose(lap)


@pytest.fixture(scope="session")
def perturbed20():
    lap = directed_laplacian(gen_perturbed_cycle(20, 0.2, 0.8, seed=7))
    return lap, decompose(lap)


@pytest.fixture(scope="session")
def cycle4():
    lap = directed_laplacian(gen_directed_cycle(4))
    return lap, decompose(lap)


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)
