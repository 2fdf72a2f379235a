import numpy as np
import pytest

from lietriple import (
    exp,
    heisenberg5,
    heisenberg5_group,
    so3,
    so3_group,
)


@pytest.fixture
def rng():
    return np.random.default_rng(42)


@pytest.fixture(scope="session")
def so3_alg():
    return so3()


@pytest.fixture(scope="session")
def so3_spec():
    return so3_group()


@pytest.fixture(scope="session")
def h5_alg():
    return heisenberg5()


@pytest.fixture(scope="session")
def h5_spec():
    return heisenberg5_group()


@pytest.fixture(params=["so3", "h5"])
def alg_and_group(request, so3_alg, so3_spec, h5_alg, h5_spec):
    """Both built-in algebra/group pairs, for tests generic in the group."""
    if request.param == "so3":
        return so3_alg, so3_spec
    return h5_alg, h5_spec


def random_element(spec, rng, scale=1.0):
    """A random group element reached by one exponential."""
    return exp(spec, scale * rng.standard_normal(spec.algebra.dim))


def random_rotation(spec, rng):
    """A rotation with angle uniform in (0, pi)."""
    w = rng.standard_normal(3)
    w *= rng.uniform(0.0, np.pi) / np.linalg.norm(w)
    return exp(spec, w)
