import numpy as np
import pytest

from resqss.protocol import Secret


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def secret():
    return Secret(0.6, 0.8)


@pytest.fixture
def random_secrets(rng):
    return [Secret.random(rng) for _ in range(20)]


@pytest.fixture
def many_secrets(rng):
    return [Secret.random(rng) for _ in range(100)]
