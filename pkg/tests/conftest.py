import os
from functools import lru_cache

import pytest

from minsep.engine import enumerate_Rg
from minsep.perm import Permutation

LONG = os.environ.get("MINSEP_LONG") == "1"


def P(text, n):
    return Permutation.from_cycles(text, n)


@lru_cache(maxsize=None)
def rg(g):
    return tuple(enumerate_Rg(g))


@pytest.fixture(scope="session")
def r_lists():
    return {g: list(rg(g)) for g in (1, 2, 3)}


def pytest_collection_modifyitems(config, items):
    if LONG:
        return
    skip = pytest.mark.skip(reason="long run; set MINSEP_LONG=1")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


_criteria = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None or (report.when != "call" and report.passed):
        return
    num, label = marker
    _criteria.setdefault(num, (label, []))[1].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        report.criterion = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        label, outcomes = _criteria[num]
        if "failed" in outcomes:
            outcome = "FAIL"
        elif all(o == "skipped" for o in outcomes):
            outcome = "SKIP"
        else:
            outcome = "PASS"
        terminalreporter.write_line(f"{outcome} criterion {num}: {label}")
