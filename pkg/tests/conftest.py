import random

import pytest

from webtopo.graph import build_directed, build_undirected

# Graph of the worked example: A-E form a dense core, C also reaches F, H.
FIG1A_EDGES = [
    ("A", "B"), ("A", "C"), ("A", "D"), ("A", "E"),
    ("B", "C"), ("B", "G"),
    ("C", "D"), ("C", "E"), ("C", "F"), ("C", "H"),
    ("D", "E"), ("F", "H"),
]
FIG1B_ARCS = [
    ("B", "A"), ("C", "A"), ("E", "A"),
    ("A", "C"), ("A", "D"),
    ("B", "C"), ("E", "C"), ("C", "D"),
]


def random_pairs(n, p, seed):
    """Independent coin flip per unordered pair (used only by tests)."""
    rng = random.Random(seed)
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def random_arcs(n, p, seed):
    rng = random.Random(seed)
    return [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]


def star(n_leaves):
    return [(0, i) for i in range(1, n_leaves + 1)]


def complete(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


@pytest.fixture
def fig1a():
    return build_undirected(FIG1A_EDGES)


@pytest.fixture
def fig1b():
    return build_directed(FIG1B_ARCS)


@pytest.fixture
def k4():
    return build_undirected(complete(4))


def as_dict(curve):
    return {float(x): float(y) for x, y in curve.points()}



_acceptance_results = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and (
        rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed")
    ):
        title = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance_results.append((title, rep.outcome.upper(), rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for title, outcome, duration in _acceptance_results:
        terminalreporter.write_line(f"{outcome:7} {title}  ({duration:.1f}s)")
