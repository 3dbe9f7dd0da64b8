import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def tie_free(rng, n, min_gap=0.0):
    """Normal sample with no ties (and, optionally, a minimum relative spacing)."""
    while True:
        v = rng.standard_normal(n)
        s = np.sort(v)
        gaps = np.diff(s)
        if np.all(gaps > 0) and (min_gap == 0.0 or gaps.min() >= min_gap * (s[-1] - s[0])):
            return v


ACCEPTANCE = {}


def record(criterion, passed, detail):
    """Store one acceptance line; printed in the terminal summary."""
    ACCEPTANCE[criterion] = (passed, detail)
    return passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {key}: {detail}")
