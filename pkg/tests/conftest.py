from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from turan_local.graph import PARAGLIDER, Y_GRAPH, Graph, complete_graph, cycle_graph, graph_from_edges


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_from_edges(n, [e for e, k in zip(pairs, keep) if k])


@pytest.fixture
def X() -> Graph:
    return PARAGLIDER


@pytest.fixture
def Y() -> Graph:
    return Y_GRAPH


@pytest.fixture
def C5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def K33() -> Graph:
    return graph_from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)])


@pytest.fixture
def K4() -> Graph:
    return complete_graph(4)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[key])
