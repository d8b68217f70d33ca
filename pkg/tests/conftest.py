from pathlib import Path

import pytest

from ltibound.testkit import read_manifest

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def continuous_corpus():
    return list(read_manifest(DATA / "continuous_corpus.tsv"))


@pytest.fixture(scope="session")
def discrete_corpus():
    return list(read_manifest(DATA / "discrete_corpus.tsv"))


# -- acceptance reporting ----------------------------------------------------
# Tests marked ``criterion(number, title, tolerance)`` get one PASS/FAIL line
# each in the terminal summary.

_criteria: dict[int, tuple[str, str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, tolerance): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, title, tolerance = mark.args
        _criteria[number] = (title, tolerance, rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, tolerance, passed = _criteria[number]
        terminalreporter.write_line(
            f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title} [tolerance: {tolerance}]"
        )
