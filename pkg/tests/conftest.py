"""Collects the outcome of every acceptance criterion and prints one line each."""

import pytest

_OUTCOMES = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call" and not rep.failed:
        return
    n = marker.args[0]
    detail = dict(item.user_properties).get("detail", "")
    ok = rep.passed
    prev = _OUTCOMES.get(n)
    if prev is not None:
        ok = ok and prev[0]
        detail = prev[1] if not prev[0] else detail or prev[1]
    _OUTCOMES[n] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_OUTCOMES):
        ok, detail = _OUTCOMES[n]
        line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
