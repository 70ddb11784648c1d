import random

import pytest

from netdeg.graphs import Bigraph, Digraph, Graph, all_pairs


@pytest.fixture
def rng():
    return random.Random(20240601)


def random_graph(n, rng, p=0.5):
    return Graph(n, frozenset(e for e in all_pairs(n) if rng.random() < p))


def random_digraph(n, rng):
    arcs = set()
    for u, v in all_pairs(n):
        r = rng.random()
        if r < 1 / 3:
            arcs.add((u, v))
        elif r < 2 / 3:
            arcs.add((v, u))
    return Digraph(n, frozenset(arcs))


def random_bigraph(n, rng, p=0.6):
    signs = {}
    for e in all_pairs(n):
        if rng.random() < p:
            signs[e] = (rng.choice((1, -1)), rng.choice((1, -1)))
    return Bigraph(n, signs)
