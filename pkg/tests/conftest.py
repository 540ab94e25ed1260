from functools import lru_cache
from pathlib import Path

import pytest

from distcolor.graph import iter_graph6

DATA = Path(__file__).parent / "data"


@lru_cache(maxsize=None)
def census(name):
    with open(DATA / name) as fh:
        return tuple(iter_graph6(fh))


def connected_upto8():
    return census("connected_upto8.g6")


def girth5_upto10():
    return census("girth5_connected_upto10.g6")


def bip_girth6_upto12():
    return census("bip_girth6_connected_upto12.g6")


_criteria: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria.setdefault(mark.args[0], []).append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        results = _criteria[n]
        ok = all(passed for _, passed in results)
        passed = sum(p for _, p in results)
        failed = [name for name, p in results if not p]
        tail = f"  failing: {', '.join(failed)}" if failed else ""
        terminalreporter.write_line(
            f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {passed}/{len(results)} tests{tail}")
