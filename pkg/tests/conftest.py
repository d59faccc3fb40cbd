import time

import pytest

SESSION = {"start": None}
VERDICTS = []


def pytest_sessionstart(session):
    SESSION["start"] = time.perf_counter()


def pytest_collection_modifyitems(config, items):
    # the wall-clock criterion must run after everything else
    last = [it for it in items if it.get_closest_marker("runs_last")]
    rest = [it for it in items if not it.get_closest_marker("runs_last")]
    items[:] = rest + last


def pytest_configure(config):
    config.addinivalue_line("markers", "runs_last: run after every other test")


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)


@pytest.fixture
def verdict():
    """Record and print a one-line pass/fail verdict for an acceptance criterion."""

    def record(number, ok, what):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {what}"
        VERDICTS.append(line)
        print(line)
        return ok

    return record


@pytest.fixture(scope="session")
def session_clock():
    return SESSION
