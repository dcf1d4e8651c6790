import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

_criteria = []


@pytest.fixture
def corpus():
    return CORPUS


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(text): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark and rep.when == "call":
        _criteria.append((mark.args[0], rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for text, ok in _criteria:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {text}")
