import random

import pytest

from persteenrod.samples import rp2, rp2_cocycle, torus

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(scope="session")
def rp2_complex():
    return rp2()


@pytest.fixture(scope="session")
def rp2_alpha():
    return rp2_cocycle()


@pytest.fixture(scope="session")
def torus_complex():
    return torus()


@pytest.fixture
def report():
    """Record one acceptance line, then assert it."""

    def _report(number, name, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number} ({name}) {detail}".rstrip()
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
