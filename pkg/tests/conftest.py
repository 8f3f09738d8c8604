from pathlib import Path

import numpy as np
import pytest

from src.bmlp.datalog.codec import compile
from src.bmlp.datalog.facts import read_facts
from src.bmlp.datalog.symbols import build_symbols
from src.bmlp.matrix.bitmat import BitMatrix

DATA_DIR = Path(__file__).parent / "data"


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False,
                     help="run the timing checks on large random graphs")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def rng():
    """A fixed-seed generator so random instances are the same every run."""
    return np.random.default_rng(20240731)


@pytest.fixture
def make_matrix(rng):
    """Factory for random matrices: make_matrix(rows, cols, density=0.3)."""
    def factory(rows, cols=None, density=0.3, name=None):
        cols = rows if cols is None else cols
        return BitMatrix.from_bool(rng.random((rows, cols)) < density, name=name)
    return factory


@pytest.fixture
def example_facts():
    """node(a). node(b). node(c). edge(a,b). edge(b,c)."""
    return read_facts(DATA_DIR / "ex.pl")


@pytest.fixture
def example_symbols(example_facts):
    return build_symbols(example_facts, "node")


@pytest.fixture
def edge_matrix(example_facts, example_symbols):
    return compile(example_facts, "edge", example_symbols)


@pytest.fixture
def location_facts():
    """Seven locations with contains(t1,g2), contains(g3,t1), adjoins(g3,g4)."""
    return read_facts(DATA_DIR / "db.pl")


@pytest.fixture
def location_symbols(location_facts):
    return build_symbols(location_facts, "location")


@pytest.fixture
def is_foreign_exceptions():
    return {("t1", "g4"), ("g2", "g4"), ("g3", "g4"), ("g4", "g3")}
