import pytest

from stringzeta import load_corpus, prepare

CORPUS = ("gp23", "kronecker2", "sb1")

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and report.outcome != "failed":
        return
    n = dict(report.user_properties).get("criterion")
    if n is None:
        return
    ok = report.outcome == "passed"
    _criteria[n] = _criteria.get(n, True) and ok


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.user_properties.append(("criterion", m.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if _criteria[n] else 'FAIL'}")


@pytest.fixture(scope="session")
def gp23():
    return prepare(load_corpus("gp23"), require_string_algebra=True)


@pytest.fixture(scope="session")
def kronecker():
    return prepare(load_corpus("kronecker2"), require_string_algebra=True)


@pytest.fixture(scope="session")
def sb1():
    return prepare(load_corpus("sb1"), require_string_algebra=True)


@pytest.fixture(scope="session", params=CORPUS)
def algebra(request):
    return request.param, prepare(load_corpus(request.param), require_string_algebra=True)
