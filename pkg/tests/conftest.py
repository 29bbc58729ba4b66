import pytest
from hypothesis import strategies as st

from ghspace import validate_metric

ACCEPTANCE_LINES = []


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow certification tiers")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def shortest_path_space(n, weights):
    d = [[0] * n for _ in range(n)]
    it = iter(weights)
    for i in range(n):
        for j in range(i + 1, n):
            d[i][j] = d[j][i] = next(it)
    for k in range(n):
        for i in range(n):
            for j in range(n):
                d[i][j] = min(d[i][j], d[i][k] + d[k][j])
    return validate_metric(None, d)


@st.composite
def metric_spaces(draw, min_n=1, max_n=5, max_weight=12):
    n = draw(st.integers(min_n, max_n))
    weights = draw(st.lists(st.integers(1, max_weight), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return shortest_path_space(n, weights)


def space(*rows):
    return validate_metric(None, rows)


@pytest.fixture
def triangle345():
    return space([0, 3, 4], [3, 0, 5], [4, 5, 0])


@pytest.fixture
def equilateral():
    return space([0, 1, 1], [1, 0, 1], [1, 1, 0])
