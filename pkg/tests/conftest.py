import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE: dict[int, tuple[bool, str]] = {}
NOTES: dict[int, list[str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the body asserts, the fixture reports."""
    record = {}

    def start(number: int, text: str):
        record["n"], record["text"] = number, text

    yield start
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    n = record["n"]
    # several tests may share one criterion number; all of them must pass
    prev_ok = ACCEPTANCE.get(n, (True, ""))[0]
    ACCEPTANCE[n] = (prev_ok and not failed, record["text"])


@pytest.fixture
def note(request):
    """Attach a measured value to the criterion summary line."""
    def add(number: int, text: str):
        NOTES.setdefault(number, []).append(text)

    return add


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")
        for extra in NOTES.get(n, []):
            terminalreporter.write_line(f"              {extra}")
