import pytest
from hypothesis import HealthCheck, settings

from signedcayley.domination import _observers

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# every (graph, result) solved during the session, for the invariant criterion
SOLVED: list = []
ACCEPTANCE_LINES: list[str] = []


def _record(g, res):
    SOLVED.append((g, res))


def pytest_configure(config):
    _observers.append(_record)


def pytest_collection_modifyitems(session, config, items):
    # the invariant sweep over all solved instances must run last
    last = [it for it in items if it.get_closest_marker("runs_last")]
    items[:] = [it for it in items if it not in last] + last


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per criterion and fail the test on FAIL."""
    def report(criterion: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
    return report
