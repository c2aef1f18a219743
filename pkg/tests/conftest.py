import pytest

from binedge.graph import Graph


@pytest.fixture
def paw():
    """Triangle 1-2-3 with pendant vertex 4 on 2."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (2, 4)])


# -- acceptance criterion reporting ---------------------------------------

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when == "teardown":
        return
    number, title = mark.args
    failed = call.excinfo is not None and not call.excinfo.errisinstance(pytest.skip.Exception)
    if call.when == "setup" and not failed:
        return
    # one failing test marks the whole criterion
    previous = _criteria.get(number, (title, "PASS"))[1]
    _criteria[number] = (title, "FAIL" if failed or previous == "FAIL" else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {outcome}  {title}")
