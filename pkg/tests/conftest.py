import pytest

from quiverlab import positive_roots, standard_quiver


@pytest.fixture(scope="session")
def a2():
    return standard_quiver("A", 2)


@pytest.fixture(scope="session")
def a3():
    return standard_quiver("A", 3)


@pytest.fixture(scope="session")
def d4():
    return standard_quiver("D", 4)


@pytest.fixture(scope="session")
def t2(a2):
    return positive_roots(a2)


@pytest.fixture(scope="session")
def t3(a3):
    return positive_roots(a3)


@pytest.fixture(scope="session")
def t4(d4):
    return positive_roots(d4)
