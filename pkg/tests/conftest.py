import pathlib
import sys

import numpy as np
import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from tautilt.textio import parse_algebra_file

DATA = pathlib.Path(__file__).parent / "data"


def load(name):
    return parse_algebra_file(str(DATA / name))


@pytest.fixture(scope="session")
def nak6():
    return load("nakayama6.alg")


@pytest.fixture(scope="session")
def nak4():
    return load("nakayama4.alg")


@pytest.fixture(scope="session")
def prep3():
    return load("preproj_a3.alg")


@pytest.fixture(scope="session")
def a2():
    return load("a2.alg")


@pytest.fixture(scope="session")
def one_vertex():
    return load("one_vertex.alg")


@pytest.fixture(scope="session")
def witness():
    return load("gorenstein_witness.alg")


@pytest.fixture()
def rng():
    return np.random.default_rng(0)


@pytest.fixture(scope="session")
def data_dir():
    return DATA
