import pytest

from latdual import enumerate_lattices, enumerate_tirs_digraphs


@pytest.fixture(scope="session")
def catalog5():
    return enumerate_lattices(5)


@pytest.fixture(scope="session")
def catalog6():
    return enumerate_lattices(6)


@pytest.fixture(scope="session")
def catalog7():
    return enumerate_lattices(7)


@pytest.fixture(scope="session")
def tirs4():
    return enumerate_tirs_digraphs(4)


@pytest.fixture(scope="session")
def tirs5():
    return enumerate_tirs_digraphs(5)
