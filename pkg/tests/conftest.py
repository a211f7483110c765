import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gpsel.data import Dataset  # noqa: E402


def random_dataset(rng, n=15, p=4, signal=1.0, noise=1.0, intercept=2.0):
    X = rng.standard_normal((n, p))
    beta = np.zeros(p)
    beta[: max(1, p // 2)] = signal
    y = intercept + X @ beta + noise * rng.standard_normal(n)
    return Dataset.from_arrays(X, y)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def small_data(rng):
    return random_dataset(rng, n=15, p=4)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES

    if not LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(LINES):
        terminalreporter.write_line(LINES[k])
