"""Simple undirected graphs on vertex ids ``1..p``.

Graphs are immutable values. Isolated vertices are legal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Optional

from .errors import LoopRejected, VertexOutOfRange

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    p: int
    edges: tuple[Edge, ...]

    def __init__(self, p: int, edges: Iterable[tuple[int, int]] = ()):
        if p < 1:
            raise VertexOutOfRange(f"vertex count must be positive, got {p}")
        norm = set()
        for u, v in edges:
            if u == v:
                raise LoopRejected(f"loop at vertex {u}")
            for x in (u, v):
                if not 1 <= x <= p:
                    raise VertexOutOfRange(f"vertex {x} outside [1,{p}]")
            norm.add(norm_edge(u, v))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.p + 1)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(n) for v, n in adj.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edge_set

    def leaves(self) -> list[int]:
        return [v for v in self.vertices if self.degree(v) == 1]

    def isolated(self) -> list[int]:
        return [v for v in self.vertices if self.degree(v) == 0]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((self.degree(v) for v in self.vertices), reverse=True))

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in sorted(self.adjacency[x]):
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components) == 1

    def induced(self, vertices: Iterable[int]) -> frozenset[Edge]:
        """Edges of G with both ends in ``vertices``."""
        vs = set(vertices)
        return frozenset(e for e in self.edges if e[0] in vs and e[1] in vs)

    def relabel(self, perm: Mapping[int, int], p: Optional[int] = None) -> Graph:
        return Graph(self.p if p is None else p, ((perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"Graph(p={self.p}, edges={list(self.edges)})"


def from_edge_list(p: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    return Graph(p, pairs)


# A few named graphs used throughout tests and the CLI.

def complete(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, ((1, i) for i in range(2, leaves + 2)))


class Bipartition(NamedTuple):
    X: frozenset[int]
    Y: frozenset[int]


def bipartition(G: Graph) -> Optional[Bipartition]:
    """Two-colour G by BFS layers, or return None if G has an odd cycle.

    The lowest-id vertex of every component goes to X.
    """
    side: dict[int, int] = {}
    for comp in G.components:
        root = comp[0]
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(G.adjacency[x]):
                if y not in side:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    X = frozenset(v for v, s in side.items() if s == 0)
    Y = frozenset(v for v, s in side.items() if s == 1)
    return Bipartition(X, Y)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shift = G.p
    return Graph(G.p + H.p, list(G.edges) + [(u + shift, v + shift) for u, v in H.edges])


def find_isomorphism(
    G: Graph,
    H: Graph,
    colors_g: Optional[Mapping[int, int]] = None,
    colors_h: Optional[Mapping[int, int]] = None,
) -> Optional[dict[int, int]]:
    """Return an edge-preserving bijection V(G) -> V(H), or None.

    Optional vertex colours restrict the search to colour-preserving maps.
    Backtracks over G's vertices (BFS order from high-degree roots) and only
    tries H-vertices of equal degree.
    """
    if G.p != H.p or G.q != H.q or G.degree_sequence() != H.degree_sequence():
        return None

    def key(graph, colors, v):
        c = colors[v] if colors is not None else 0
        nbr = tuple(sorted(graph.degree(u) for u in graph.adjacency[v]))
        return (c, graph.degree(v), nbr)

    kg = {v: key(G, colors_g, v) for v in G.vertices}
    kh = {v: key(H, colors_h, v) for v in H.vertices}
    if sorted(kg.values()) != sorted(kh.values()):
        return None

    order: list[int] = []
    placed: set[int] = set()
    for root in sorted(G.vertices, key=lambda v: (-G.degree(v), v)):
        if root in placed:
            continue
        placed.add(root)
        queue = deque([root])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(G.adjacency[x], key=lambda v: (-G.degree(v), v)):
                if y not in placed:
                    placed.add(y)
                    queue.append(y)

    candidates = {v: [w for w in H.vertices if kh[w] == kg[v]] for v in G.vertices}
    m: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            ok = True
            for u, mu in m.items():
                if G.has_edge(u, v) != H.has_edge(mu, w):
                    ok = False
                    break
            if not ok:
                continue
            m[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del m[v]
            used.discard(w)
        return False

    return dict(m) if extend(0) else None


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return find_isomorphism(G, H) is not None


def invariant_key(G: Graph) -> tuple:
    """Cheap isomorphism invariant for bucketing before exact tests."""
    per_vertex = sorted(
        (G.degree(v), tuple(sorted(G.degree(u) for u in G.adjacency[v]))) for v in G.vertices
    )
    return (G.p, G.q, tuple(per_vertex))
