import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from setupls.model import Instance  # noqa: E402

ACCEPTANCE_LINES = pytest.StashKey[list]()

TOY_SETUP = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


@pytest.fixture
def toy():
    """Four unit jobs of types 1, 2, 3, 1 (0-based 0, 1, 2, 0), no deadlines, unit setups."""
    return Instance.from_lists([1, 1, 1, 1], [None] * 4, [0, 1, 2, 0], TOY_SETUP)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
