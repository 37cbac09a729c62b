"""Shared fixtures plus a terminal summary hook for the acceptance suite.

Tests named test_criterion_<N> (in test_acceptance.py) are tracked and a
single "criterion N: PASS/FAIL — detail" line per criterion is printed at
the end of the run, whatever the capture settings.
"""

import re

import pytest

import latticealg as la

UNITAL_FIXTURES = [n for n in la.BUILTIN_NAMES if la.builtin(n).has_identity()]


@pytest.fixture(params=UNITAL_FIXTURES)
def unital_algebra(request):
    return la.builtin(request.param)


_acceptance: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call":
        return
    match = re.match(r"test_criterion_(\d+)", item.name)
    if not match:
        return
    n = int(match.group(1))
    entry = _acceptance.setdefault(n, {"passed": True, "detail": ""})
    entry["passed"] = entry["passed"] and rep.passed
    detail = getattr(item.module, "DETAILS", {}).get(n, "")
    if detail:
        entry["detail"] = detail


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for n in sorted(_acceptance):
        entry = _acceptance[n]
        status = "PASS" if entry["passed"] else "FAIL"
        line = f"criterion {n}: {status}"
        if entry["detail"]:
            line += f" — {entry['detail']}"
        terminalreporter.write_line(line)
