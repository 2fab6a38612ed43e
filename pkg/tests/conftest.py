"""Shared corpora and helpers for the test suite.

The unlabeled connected corpus up to seven vertices comes from the
networkx graph atlas, used here purely as an independent reference.
Random graphs are drawn from a fixed seed so every run sees the same
corpus.
"""

from random import Random

import pytest

from lafr.campaigns import mask_to_graph
from lafr.graphs import Graph


def atlas_connected(max_n: int) -> list[Graph]:
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for G in graph_atlas_g():
        n = G.number_of_nodes()
        if not 1 <= n <= max_n:
            continue
        if not nx.is_connected(G):
            continue
        out.append(Graph.from_edges(n, G.edges()))
    return out


def random_graph(rng: Random, n: int) -> Graph:
    return mask_to_graph(n, rng.getrandbits(n * (n - 1) // 2))


@pytest.fixture(scope="session")
def connected_upto_6() -> list[Graph]:
    return atlas_connected(6)


@pytest.fixture(scope="session")
def connected_upto_7() -> list[Graph]:
    return atlas_connected(7)


@pytest.fixture(scope="session")
def random_8_to_12() -> list[Graph]:
    rng = Random(0x1AFA)
    out = []
    for n in range(8, 13):
        for _ in range(40):
            out.append(random_graph(rng, n))
    return out
