import random

import pytest

from pompeiu.groups import cyclic, dihedral, direct_product, fleet, quaternion8, symmetric

ACCEPTANCE_LINES = []


def record_criterion(number, title, passed, detail=""):
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def the_fleet():
    return fleet()


@pytest.fixture
def rng():
    return random.Random(1234)


SMALL_GROUPS = {
    "Z1": lambda: cyclic(1),
    "Z2": lambda: cyclic(2),
    "Z5": lambda: cyclic(5),
    "Z6": lambda: cyclic(6),
    "D4": lambda: dihedral(4),
    "S3": lambda: symmetric(3),
    "Q8": quaternion8,
    "Z2xZ2": lambda: direct_product(cyclic(2), cyclic(2)),
}


@pytest.fixture(params=sorted(SMALL_GROUPS))
def small_group(request):
    return SMALL_GROUPS[request.param]()
