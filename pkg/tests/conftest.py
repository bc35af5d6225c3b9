import pytest

from abstract_tangles.fixtures import fixture


@pytest.fixture
def k3():
    return fixture("k3")


@pytest.fixture
def c4():
    return fixture("c4")


def by_left(u, *lefts):
    """Oriented bipartitions given by their left sides (lists of int labels)."""
    return [u.from_left([str(x) for x in left]) for left in lefts]


def one(u, left):
    return u.from_left([str(x) for x in left])


# verdict lines recorded by test_acceptance.py, printed after the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
