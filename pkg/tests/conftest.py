"""Shared fixtures and helpers for the test suite."""

import random

import pytest
from hypothesis import HealthCheck, settings

from rlvd.graphs import Graph

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

ALL_CELLS = [(r, l) for r in range(3) for l in range(3)]


def rand_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


@pytest.fixture(scope="session")
def graph_pool():
    """A fixed pool of random graphs reused by sweep-style tests."""
    r = random.Random(1776)
    pool = []
    for _ in range(120):
        n = r.randrange(0, 8)
        pool.append(rand_graph(r, n, r.choice([0.2, 0.5, 0.8])))
    return pool
