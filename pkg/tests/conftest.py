import random

import pytest

_ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def rng():
    return random.Random(20061016)


@pytest.fixture
def report(request):
    """Record one PASS/FAIL line for an acceptance criterion.

    Call ``report(k, text)`` before asserting; the line is rewritten as FAIL
    if the test does not pass.
    """
    state = {}

    def _record(number: int, text: str) -> None:
        state["number"], state["text"] = number, text

    yield _record
    if "number" in state:
        outcome = getattr(request.node, "_outcome_passed", None)
        status = "PASS" if outcome else "FAIL"
        _ACCEPTANCE_LINES[state["number"]] = f"[{status}] criterion {state['number']:2d}: {state['text']}"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item._outcome_passed = rep.passed


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(_ACCEPTANCE_LINES[k])
