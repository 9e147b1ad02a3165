import numpy as np
import pytest

from mvpolytopes.cartan import build_cartan
from mvpolytopes.weyl import weyl_group


@pytest.fixture(scope="session")
def a1():
    return weyl_group(build_cartan("A", 1))


@pytest.fixture(scope="session")
def a2():
    return weyl_group(build_cartan("A", 2))


@pytest.fixture(scope="session")
def b2():
    return weyl_group(build_cartan("B", 2))


@pytest.fixture(scope="session")
def a3():
    return weyl_group(build_cartan("A", 3))


@pytest.fixture(scope="session")
def b3():
    return weyl_group(build_cartan("B", 3))


@pytest.fixture()
def rng():
    return np.random.default_rng(20260814)
