import sys
from pathlib import Path

import pytest

from assocscheme.catalog import by_name
from assocscheme.scheme_core import validate_axioms
from assocscheme.spectral import krein_parameters, primitive_idempotents

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"


class Analysed:
    def __init__(self, name):
        self.entry = by_name(name)
        self.table = self.entry.table
        self.tensor = validate_axioms(self.table)
        self.basis = primitive_idempotents(self.table, self.tensor)
        self.krein = krein_parameters(self.basis)


_cache = {}


def analysed(name):
    if name not in _cache:
        _cache[name] = Analysed(name)
    return _cache[name]


@pytest.fixture
def petersen():
    return analysed("petersen")


@pytest.fixture
def cube():
    return analysed("cube")


@pytest.fixture
def pentagon():
    return analysed("pentagon")


@pytest.fixture
def icosahedron():
    return analysed("icosahedron")


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
