import pytest

from chordstar.canon import enumerate_graphs
from chordstar.invariants import is_chordal, is_chordal_star

_ACCEPTANCE: dict[str, str] = {}


def graphs_upto(max_n, min_n=1):
    for n in range(min_n, max_n + 1):
        yield from enumerate_graphs(n)


def chordal_upto(max_n, min_n=1):
    return [g for g in graphs_upto(max_n, min_n) if is_chordal(g)]


def chordal_star_upto(max_n, min_n=1):
    return [g for g in graphs_upto(max_n, min_n) if is_chordal_star(g)]


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test body must finish for PASS."""
    name = request.node.get_closest_marker("criterion").args[0]
    _ACCEPTANCE[name] = "FAIL"
    yield
    rep = getattr(request.node, "rep_call", None)
    if rep is not None and rep.passed:
        _ACCEPTANCE[name] = "PASS"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion reported in the summary")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[0].rstrip("."))):
        terminalreporter.write_line(f"{_ACCEPTANCE[name]}  {name}")
