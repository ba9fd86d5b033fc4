import random

import pytest

from connect4 import StandardSet


def ss(*elements, dim=None):
    """Staircase from exponent tuples; dim defaults to the tuple length."""
    if dim is None:
        dim = len(elements[0])
    return StandardSet(elements, dim)


# {0, e1, e2, e3}: the smallest staircase with two decompositions.
TETRA = ss((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))
# The two size-6 staircases whose strata have dimension 11 and 12.
DELTA_1 = ss((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 0, 0), (1, 1, 0))
DELTA_2 = ss((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 2, 0))
# {0, e1, e2, e3, e4, 2e4} in N^4.
SPIKE4 = ss(
    (0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (0, 0, 0, 2)
)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(mod.RESULTS):
            terminalreporter.write_line(mod.RESULTS[k])
