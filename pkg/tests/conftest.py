import functools
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from leafspan.enumeration import enumerate_connected  # noqa: E402
from leafspan.graph import Graph  # noqa: E402


@functools.lru_cache(maxsize=None)
def connected(n):
    return tuple(enumerate_connected(n))


def connected_upto(n):
    return [g for m in range(1, n + 1) for g in connected(m)]


@st.composite
def graphs(draw, min_n=1, max_n=8, connected_only=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])
    if connected_only:
        # thread a random spanning path so the graph is connected
        order = draw(st.permutations(range(n)))
        for a, b in zip(order, order[1:]):
            if not g.has_edge(a, b):
                g = g.add_edge(a, b)
    return g


@pytest.fixture(scope="session")
def order7():
    return connected(7)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
