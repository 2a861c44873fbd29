import itertools
from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"

_acceptance = {}


@pytest.fixture
def golden():
    return GOLDEN


def naive_eval(q):
    """Textbook QBF semantics: expand the whole prefix, evaluate at leaves."""
    order = q.prefix.variables
    quants = [q.prefix.quantifier(v) for v in order]
    clauses = [list(c) for c in q.matrix]

    def rec(k, val):
        if k == len(order):
            return all(any(val[abs(l)] == (l > 0) for l in c) for c in clauses)
        branches = []
        for b in (False, True):
            val[order[k]] = b
            branches.append(rec(k + 1, val))
        del val[order[k]]
        return any(branches) if quants[k] == "e" else all(branches)

    return rec(0, {})


def all_assignments(vs):
    for bits in itertools.product([False, True], repeat=len(vs)):
        yield dict(zip(vs, bits))


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    prev = _acceptance.get(crit, True)
    _acceptance[crit] = prev and report.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    if m is not None:
        rep.criterion = m.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_acceptance):
        terminalreporter.write_line("criterion %d: %s" % (crit, "PASS" if _acceptance[crit] else "FAIL"))
