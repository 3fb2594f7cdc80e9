import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from qunivalent import STARLIKE, OperatorWeights

settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rng():
    return np.random.default_rng(20191016)


@pytest.fixture
def starlike():
    """Identity weights up to N = 16 with (mu, beta, delta) = (0, 1, 1)."""
    return OperatorWeights.identity(16), STARLIKE


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
