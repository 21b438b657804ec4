"""Brute-force oracles used to cross-check the backtracking searches.

They enumerate the full assignment space with itertools.product and test
each assignment straight from the definitions, sharing no code with the
searchers.
"""

from __future__ import annotations

import itertools

from .graph import Graph


def all_homs(G: Graph, H: Graph) -> list[dict[int, int]]:
    """Every map V(G) -> V(H) taking each edge onto an edge."""
    E = {frozenset(e) for e in H.edges}
    out = []
    for images in itertools.product(range(1, H.p + 1), repeat=G.p):
        if all(frozenset((images[u - 1], images[v - 1])) in E and images[u - 1] != images[v - 1]
               for u, v in G.edges):
            out.append(dict(zip(range(1, G.p + 1), images)))
    return out


def all_graceful_vertex_colorings(G: Graph, odd: bool = False, set_ordered: bool = False) -> list[tuple[int, ...]]:
    """Vertex colour vectors whose difference-induced edge colours form
    [1,q] (or the odd set {1,3,...,2q-1}), with colours in [1,q+1]
    (or [1,2q+2]); optionally also set-ordered."""
    q = G.q
    hi = 2 * q + 2 if odd else q + 1
    want = sorted(range(1, 2 * q, 2)) if odd else list(range(1, q + 1))
    out = []
    for cols in itertools.product(range(1, hi + 1), repeat=G.p):
        diffs = sorted(abs(cols[u - 1] - cols[v - 1]) for u, v in G.edges)
        if diffs != want:
            continue
        if set_ordered and not _set_ordered(G, cols):
            continue
        out.append(cols)
    return out


def _set_ordered(G: Graph, cols) -> bool:
    # try every 2-colouring of the vertices as (X, Y)
    for mask in range(1 << G.p):
        X = [v for v in G.vertices if mask >> (v - 1) & 1]
        Y = [v for v in G.vertices if not mask >> (v - 1) & 1]
        if any((u in X) == (v in X) for u, v in G.edges):
            continue
        if not X or not Y or max(cols[v - 1] for v in X) < min(cols[v - 1] for v in Y):
            return True
    return False


def is_properly_colorable(G: Graph, n: int) -> bool:
    return any(
        all(c[u - 1] != c[v - 1] for u, v in G.edges)
        for c in itertools.product(range(n), repeat=G.p)
    )


def automorphisms(G: Graph) -> list[dict[int, int]]:
    E = G.edge_set
    out = []
    for perm in itertools.permutations(G.vertices):
        if all(tuple(sorted((perm[u - 1], perm[v - 1]))) in E for u, v in G.edges):
            out.append(dict(zip(G.vertices, perm)))
    return out


def isomorphic(G: Graph, H: Graph) -> bool:
    if G.p != H.p or G.q != H.q:
        return False
    E = H.edge_set
    return any(
        all(tuple(sorted((perm[u - 1], perm[v - 1]))) in E for u, v in G.edges)
        for perm in itertools.permutations(H.vertices)
    )


def has_odd_cycle(G: Graph) -> bool:
    """Search closed walks of odd length up to p; one exists iff an odd cycle does."""
    adj = G.adjacency
    for s in G.vertices:
        frontier = {s}
        for length in range(1, G.p + 1):
            frontier = {y for x in frontier for y in adj[x]}
            if length % 2 and s in frontier:
                return True
    return False
