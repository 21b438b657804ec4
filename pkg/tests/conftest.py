from __future__ import annotations

import random

import networkx as nx
import pytest

from gracehom.coloring import WType
from gracehom.graph import Graph
from gracehom.samples import REFERENCE_TOPCODE
from gracehom.topcode import maximal_merge


def from_nx(g) -> Graph:
    nodes = sorted(g.nodes())
    idx = {v: i for i, v in enumerate(nodes, start=1)}
    return Graph(max(len(nodes), 1), [(idx[u], idx[v]) for u, v in g.edges()])


def all_graphs(max_p: int, min_p: int = 1) -> list[Graph]:
    """Every simple graph up to isomorphism with min_p..max_p vertices."""
    return [from_nx(g) for g in nx.graph_atlas_g() if min_p <= g.number_of_nodes() <= max_p]


def all_trees(max_p: int) -> list[Graph]:
    out = []
    for n in range(2, max_p + 1):
        out += [from_nx(t) for t in nx.nonisomorphic_trees(n)]
    return out


def random_graph(rng: random.Random, p: int, density: float = 0.5) -> Graph:
    pairs = [(u, v) for u in range(1, p + 1) for v in range(u + 1, p + 1)]
    return Graph(p, [e for e in pairs if rng.random() < density])


def random_connected(rng: random.Random, p: int, extra: float = 0.3) -> Graph:
    edges = [(rng.randint(1, v - 1), v) for v in range(2, p + 1)]
    edges += [(u, v) for u in range(1, p + 1) for v in range(u + 1, p + 1) if rng.random() < extra]
    perm = list(range(1, p + 1))
    rng.shuffle(perm)
    return Graph(p, [(perm[u - 1], perm[v - 1]) for u, v in edges])


@pytest.fixture(scope="session")
def reference():
    """Maximal-merge decode of the reference matrix (graph and colouring)."""
    return maximal_merge(REFERENCE_TOPCODE, WType.SET_ORDERED_GRACEFUL)
