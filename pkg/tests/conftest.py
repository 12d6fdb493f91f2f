import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest
from hypothesis import strategies as st

from bicover.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, frozenset(chosen))


def path(n):
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle(n):
    return Graph(n, frozenset((min(i, i % n + 1), max(i, i % n + 1)) for i in range(1, n + 1)))


@pytest.fixture
def k22():
    return Graph(4, frozenset({(1, 3), (1, 4), (2, 3), (2, 4)}))


_CRITERIA: dict[int, tuple[str, float]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    num = int(report.nodeid.split("test_criterion_")[1].split("_")[0])
    _CRITERIA[num] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        status, secs = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num:2d}: {status} ({secs:.1f}s)")
