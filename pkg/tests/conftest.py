import random

import pytest

from inconic.kernel import TriangleRef

ACCEPTANCE_LINES = []


@pytest.fixture
def ref_triangle():
    # acute; a2=18, b2=10, c2=16
    return TriangleRef((0, 0), (4, 0), (1, 3))


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def acceptance_log():
    def log(number, text, ok):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return log


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

