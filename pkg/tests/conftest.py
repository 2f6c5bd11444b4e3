import random
from functools import lru_cache

import pytest

from spectral_ds.generate import generate_graphs
from spectral_ds.graph import Graph


@lru_cache(maxsize=None)
def graphs_up_to(n_max: int) -> tuple[Graph, ...]:
    return tuple(g for n in range(1, n_max + 1) for g in generate_graphs(n))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.fixture(scope="session")
def small_graphs() -> tuple[Graph, ...]:
    """One graph per isomorphism class, 1 to 7 vertices (1253 graphs)."""
    return graphs_up_to(7)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
