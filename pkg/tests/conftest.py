import pytest

from gradedideals import GF, QQ, PolynomialRing


@pytest.fixture
def Rxy():
    return PolynomialRing(QQ, ["x", "y"])


@pytest.fixture
def Rxyz():
    return PolynomialRing(QQ, ["x", "y", "z"])


@pytest.fixture
def Pxyz():
    return PolynomialRing(GF(32003), ["x", "y", "z"])


ACCEPTANCE_LINES: list = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
