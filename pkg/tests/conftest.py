"""Shared helpers for the test suite."""

import itertools
import random

import pytest

from twindex import is_connected, new_graph


def random_graph(rng: random.Random, n: int, p: float = 0.5):
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return new_graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5):
    """Rejection-sample a connected graph; densify if unlucky."""
    for attempt in range(200):
        g = random_graph(rng, n, min(0.95, p + attempt * 0.01))
        if is_connected(g):
            return g
    raise AssertionError(f"could not sample a connected graph on {n} vertices")


def all_graphs(n: int):
    """Every labeled graph on n vertices (2^binom(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        yield new_graph(n, edges)


@pytest.fixture
def rng():
    return random.Random(0x5EED)
