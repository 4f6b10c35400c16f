import os

import pytest

from specgap import census

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture(scope="session")
def census4():
    return census.enumerate_connected(4)


@pytest.fixture(scope="session")
def census5():
    return census.enumerate_connected(5)


@pytest.fixture(scope="session")
def census6():
    return census.enumerate_connected(6)


@pytest.fixture(scope="session")
def census7():
    return census.enumerate_connected(7)


@pytest.fixture(scope="session")
def census8_path():
    path = os.path.join(DATA_DIR, "connected8.g6")
    if not os.path.exists(path):
        pytest.skip("committed order-8 census file missing")
    return path
