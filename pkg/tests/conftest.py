import numpy as np
import pytest
from hypothesis import settings

import ahcurv as ac

settings.register_profile("default", max_examples=25, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def st2():
    return ac.standard_structure(2)


@pytest.fixture(scope="session")
def st3():
    return ac.standard_structure(3)


@pytest.fixture
def rng():
    return np.random.default_rng(20260814)


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion at the end of the run."""
    rows = []
    for category, mark in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for report in terminalreporter.stats.get(category, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance" in nodeid and "::" in nodeid:
                rows.append((nodeid.split("::")[-1], mark))
    if not rows:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, mark in sorted(rows):
        terminalreporter.write_line(f"{mark}  {name}")
