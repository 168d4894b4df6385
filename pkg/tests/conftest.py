import itertools
import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from eef import four_cycle, hilbert_basis, independence_2x2, kernel_basis

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=bool(os.environ.get("EEF_SEED")),
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def fourcycle():
    return four_cycle()


@pytest.fixture(scope="session")
def fourcycle_basis(fourcycle):
    return hilbert_basis(kernel_basis(fourcycle))


@pytest.fixture(scope="session")
def indep():
    return independence_2x2()


@pytest.fixture(scope="session")
def indep_basis(indep):
    return hilbert_basis(kernel_basis(indep))


def brute_kernel_vectors(rows, n, lo=-3, hi=3):
    """All nonzero integer vectors in [lo, hi]^n annihilated by ``rows``."""
    out = []
    for v in itertools.product(range(lo, hi + 1), repeat=n):
        if any(v) and all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows):
            out.append(v)
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
