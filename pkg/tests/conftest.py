import pytest

from semicomp import (closure, full_transformation_monoid, make_cyclic, make_flip_flop,
                      make_left_zero, make_trivial, right_regular_representation)
from semicomp.data import path as data_path
from semicomp.formats import load_sgp


@pytest.fixture(scope="session")
def flip_flop():
    return make_flip_flop()


@pytest.fixture(scope="session")
def z2():
    return make_cyclic(2)


@pytest.fixture(scope="session")
def z3():
    return make_cyclic(3)


@pytest.fixture(scope="session")
def trivial():
    return make_trivial()


@pytest.fixture(scope="session")
def left_zero():
    return make_left_zero(2)


@pytest.fixture(scope="session")
def t2_file():
    """T_2 with the element numbering of the bundled t2.sgp (labels 1..4)."""
    return load_sgp(data_path("t2.sgp"))


@pytest.fixture(scope="session")
def t2():
    return full_transformation_monoid(2)


@pytest.fixture(scope="session")
def t3():
    return full_transformation_monoid(3)


def rep(table):
    return closure(right_regular_representation(table)[0])


# acceptance reporting: one line per criterion in the terminal summary
_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call" and not report.failed:
        return
    n, text = mark.args
    ok = report.passed and _criteria.get(n, (True,))[0]
    _criteria[n] = (ok, text)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        ok, text = _criteria[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")
