import numpy as np
import pytest

from fraccep.signal import dimensionless_grid

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def gaussian_pulse(n, center=0.0, width=1.0, freq=0.0):
    """Gaussian-envelope pulse on the dimensionless grid, well inside the grid's time-frequency square."""
    u = dimensionless_grid(n)
    return np.exp(-np.pi * ((u - center) / width) ** 2) * np.exp(2j * np.pi * freq * u)


def rel_l2(got, want):
    got, want = np.asarray(got), np.asarray(want)
    return float(np.linalg.norm(got - want) / np.linalg.norm(want))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
