import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def krupp():
    from pseudocircles import constructions as con
    return con.krupp()


@pytest.fixture(scope="session")
def wheel6():
    from pseudocircles import constructions as con
    return con.wheel(6)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        title, failures = RESULTS[number]
        status = "PASS" if not failures else "FAIL"
        line = f"criterion {number:2d}: {status}  {title}"
        if failures:
            line += f"  [{len(failures)} failing: {failures[0]}]"
        terminalreporter.write_line(line)
