import pytest

from valquiver import catalog
from valquiver.cartan import cartan_matrix


@pytest.fixture
def kronecker():
    return catalog.quiver("kronecker")


@pytest.fixture
def a3():
    return catalog.quiver("A3")


@pytest.fixture
def a3_source():
    return catalog.quiver("A3_source2")


def cartan(name):
    return cartan_matrix(catalog.graph(name))


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS, key=lambda k: (int(str(k).rstrip("b")), str(k))):
        terminalreporter.write_line(mod.RESULTS[key])
