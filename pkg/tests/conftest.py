import pytest

from mzcycles import bar as B
from mzcycles.checks import cycle_table


@pytest.fixture(scope="session")
def table():
    return cycle_table(5)


@pytest.fixture(scope="session")
def alg():
    return B.default_algebra(5)
