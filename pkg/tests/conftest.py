import pytest

_criteria = []


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion.

    Usage: ``criterion("offset law")`` at the top of the test.
    """
    names = []

    def declare(name):
        names.append(name)

    yield declare
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    for name in names:
        _criteria.append((name, ok))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in _criteria:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
