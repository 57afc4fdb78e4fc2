import time

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("suite", deadline=None, max_examples=80,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")

_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Context for one acceptance criterion: times it and records pass/fail."""

    class _Criterion:
        def __init__(self):
            self.number, self.title, self.start = None, None, None

        def __call__(self, number, title):
            self.number, self.title = number, title
            self.start = time.perf_counter()
            return self

        def elapsed(self):
            return time.perf_counter() - self.start

    c = _Criterion()
    yield c
    if c.number is not None:
        rep = getattr(request.node, "rep_call", None)
        passed = rep is not None and rep.passed
        _ACCEPTANCE.append((c.number, c.title, passed, c.elapsed()))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, secs in sorted(_ACCEPTANCE):
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {title}  ({secs:.1f} s)")
