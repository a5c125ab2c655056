import sys

import pytest

from gtspace import fixtures


@pytest.fixture
def sierpinski():
    return fixtures.sierpinski()


@pytest.fixture
def discrete2():
    return fixtures.discrete2()


@pytest.fixture
def indiscrete2():
    return fixtures.indiscrete2()


@pytest.fixture
def fuzzy2():
    return fixtures.fuzzy2()


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
