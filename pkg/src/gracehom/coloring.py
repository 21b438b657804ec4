"""Total colourings, the W-type condition sets, and a backtracking colouring search.

The conditions checked by :func:`verify`:

  C-1  G is bipartite
  C-2  every edge colour is the absolute difference of its end colours
  C-4  vertex colours lie in [1, q+1]
  C-5  vertex colours lie in [1, 2q+2]
  C-6  the edge colour set is exactly [1, q]
  C-7  the edge colour set is exactly {1, 3, ..., 2q-1}
  C-8  some bipartition (X, Y) has max f(X) < min f(Y)

Vertex colours may repeat; nothing here assumes injectivity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Mapping, NamedTuple, Optional

from .errors import ColoringIncomplete, InvalidColoring, NotSetOrderedGraceful, NotSetOrderedOddGraceful
from .graph import Edge, Graph, bipartition, norm_edge
from .report import VerifyReport


class WType(enum.Enum):
    BIPARTITE = "bipartite"
    GRACEFUL = "graceful"
    SET_ORDERED_GRACEFUL = "set-ordered-graceful"
    ODD_GRACEFUL = "odd-graceful"
    SET_ORDERED_ODD_GRACEFUL = "set-ordered-odd-graceful"

    @classmethod
    def parse(cls, text: str) -> WType:
        try:
            return cls(text.strip().lower().replace("_", "-"))
        except ValueError:
            names = ", ".join(w.value for w in cls)
            raise ValueError(f"unknown W-type {text!r} (expected one of {names})") from None

    @property
    def conditions(self) -> tuple[str, ...]:
        return _CONDITIONS[self]

    @property
    def set_ordered(self) -> bool:
        return "C-8" in self.conditions

    @property
    def odd(self) -> bool:
        return self in (WType.ODD_GRACEFUL, WType.SET_ORDERED_ODD_GRACEFUL)

    @property
    def graceful_family(self) -> bool:
        return self is not WType.BIPARTITE


_CONDITIONS = {
    WType.BIPARTITE: ("C-1",),
    WType.GRACEFUL: ("C-2", "C-4", "C-6"),
    WType.SET_ORDERED_GRACEFUL: ("C-1", "C-2", "C-4", "C-6", "C-8"),
    WType.ODD_GRACEFUL: ("C-2", "C-5", "C-7"),
    WType.SET_ORDERED_ODD_GRACEFUL: ("C-1", "C-2", "C-5", "C-7", "C-8"),
}


def vertex_range(w: WType, q: int) -> tuple[int, int]:
    return (1, 2 * q + 2) if w.odd else (1, q + 1)


def edge_color_set(w: WType, q: int) -> frozenset[int]:
    if w.odd:
        return frozenset(range(1, 2 * q, 2))
    return frozenset(range(1, q + 1))


@dataclass(frozen=True)
class TotalColoring:
    vertex: Mapping[int, int]
    edge: Mapping[Edge, int]

    def __init__(self, vertex: Mapping[int, int], edge: Mapping[tuple[int, int], int]):
        vc = {int(v): int(c) for v, c in vertex.items()}
        ec = {norm_edge(u, v): int(c) for (u, v), c in edge.items()}
        for c in list(vc.values()) + list(ec.values()):
            if c < 0:
                raise InvalidColoring(f"negative colour {c}")
        object.__setattr__(self, "vertex", vc)
        object.__setattr__(self, "edge", ec)

    @classmethod
    def induced(cls, G: Graph, vertex: Mapping[int, int]) -> TotalColoring:
        """Vertex colours plus edge colours by absolute difference."""
        return cls(vertex, {(u, v): abs(vertex[u] - vertex[v]) for u, v in G.edges})

    def __call__(self, x) -> int:
        if isinstance(x, tuple):
            return self.edge[norm_edge(*x)]
        return self.vertex[x]

    def vertex_vector(self, G: Graph) -> tuple[int, ...]:
        return tuple(self.vertex[v] for v in G.vertices)

    def key(self) -> tuple:
        return (tuple(sorted(self.vertex.items())), tuple(sorted(self.edge.items())))

    def __hash__(self) -> int:
        return hash(self.key())

    def __eq__(self, other) -> bool:
        return isinstance(other, TotalColoring) and self.key() == other.key()


def check_total(G: Graph, f: TotalColoring) -> None:
    missing_v = [v for v in G.vertices if v not in f.vertex]
    missing_e = [e for e in G.edges if e not in f.edge]
    extra_v = [v for v in f.vertex if not 1 <= v <= G.p]
    extra_e = [e for e in f.edge if e not in G.edge_set]
    if missing_v or missing_e:
        raise ColoringIncomplete(f"uncoloured vertices {missing_v} edges {missing_e}")
    if extra_v or extra_e:
        raise ColoringIncomplete(f"colours given for unknown vertices {extra_v} edges {extra_e}")


class Sides(NamedTuple):
    low: frozenset[int]
    high: frozenset[int]
    threshold: int


def set_ordered_sides(G: Graph, f: TotalColoring) -> Optional[Sides]:
    """Split V(G) into a low side X and high side Y with max f(X) < min f(Y).

    Every edge must have one end at most the threshold and the other above it.
    The smallest working threshold is used, so isolated vertices go wherever
    their colour puts them. Returns None when no threshold works.
    """
    if G.q == 0:
        t = max(f.vertex.values())
    else:
        t = max(min(f.vertex[u], f.vertex[v]) for u, v in G.edges)
    for u, v in G.edges:
        if (f.vertex[u] <= t) == (f.vertex[v] <= t):
            return None
    low = frozenset(v for v in G.vertices if f.vertex[v] <= t)
    return Sides(low, frozenset(G.vertices) - low, t)


def condition_report(G: Graph, f: TotalColoring, conditions) -> VerifyReport:
    rep = VerifyReport()
    q = G.q
    vcols = [f.vertex[v] for v in G.vertices]
    ecols = [f.edge[e] for e in G.edges]
    for cond in conditions:
        if cond == "C-1":
            ok = bipartition(G) is not None
            rep.add(cond, ok, "" if ok else "graph has an odd cycle")
        elif cond == "C-2":
            bad = [e for e in G.edges if f.edge[e] != abs(f.vertex[e[0]] - f.vertex[e[1]])]
            rep.add(cond, not bad, f"edges {bad[:5]} break f(uv)=|f(u)-f(v)|" if bad else "")
        elif cond in ("C-4", "C-5"):
            hi = q + 1 if cond == "C-4" else 2 * q + 2
            bad = sorted({c for c in vcols if not 1 <= c <= hi})
            rep.add(cond, not bad, f"vertex colours {bad} outside [1,{hi}]" if bad else "")
        elif cond in ("C-6", "C-7"):
            want = edge_color_set(WType.GRACEFUL if cond == "C-6" else WType.ODD_GRACEFUL, q)
            got = set(ecols)
            ok = got == want and len(ecols) == len(want)
            rep.add(cond, ok, "" if ok else f"edge colours {sorted(ecols)} != {sorted(want)}")
        elif cond == "C-8":
            sides = set_ordered_sides(G, f) if bipartition(G) is not None else None
            if sides is None:
                rep.add(cond, False, "no bipartition with max f(X) < min f(Y)")
            else:
                rep.add(cond, True, f"threshold {sides.threshold}")
        else:
            raise ValueError(f"unknown condition {cond}")
    return rep


def verify(G: Graph, f: TotalColoring, w: WType) -> VerifyReport:
    check_total(G, f)
    return condition_report(G, f, w.conditions)


def search(G: Graph, w: WType, limit: Optional[int] = None) -> list[TotalColoring]:
    return list(iter_search(G, w, limit))


def iter_search(G: Graph, w: WType, limit: Optional[int] = None) -> Iterator[TotalColoring]:
    """Yield colourings passing ``verify(G, ., w)`` in lexicographic order of
    the vertex colour vector (f(1), ..., f(p)).

    Vertices are assigned in id order; each edge is checked as soon as both
    ends are coloured (edge colour in the allowed set and not used before).
    Set-ordered types also keep the low/high orientation of each component
    consistent while descending.
    """
    if limit is not None and limit <= 0:
        return
    p, q = G.p, G.q
    if w is WType.BIPARTITE:
        # Colours are unconstrained for this type; emit the bipartition colouring.
        bp = bipartition(G)
        if bp is not None:
            vc = {v: 1 if v in bp.X else 2 for v in G.vertices}
            yield TotalColoring.induced(G, vc)
        return
    if w.set_ordered and bipartition(G) is None:
        return
    lo, hi = vertex_range(w, q)
    allowed = edge_color_set(w, q)
    earlier = {v: sorted(u for u in G.adjacency[v] if u < v) for v in G.vertices}
    set_ordered = w.set_ordered
    if set_ordered:
        bp = bipartition(G)
        side = {v: (0 if v in bp.X else 1) for v in G.vertices}
        comp_of = {}
        for i, comp in enumerate(G.components):
            for v in comp:
                comp_of[v] = i
        orient: list[Optional[int]] = [None] * len(G.components)  # which side is low

    col = [0] * (p + 1)
    used: set[int] = set()
    emitted = 0

    def orientation_ok() -> bool:
        low_max = 0
        high_min = None
        for v in range(1, cur + 1):
            o = orient[comp_of[v]]
            if o is None:
                continue
            if side[v] == o:
                low_max = max(low_max, col[v])
            else:
                high_min = col[v] if high_min is None else min(high_min, col[v])
        return high_min is None or low_max < high_min

    cur = 0

    def rec(v: int):
        nonlocal cur, emitted
        if v > p:
            yield {x: col[x] for x in range(1, p + 1)}
            return
        for c in range(lo, hi + 1):
            col[v] = c
            added = []
            ok = True
            for u in earlier[v]:
                d = abs(c - col[u])
                if d not in allowed or d in used:
                    ok = False
                    break
                used.add(d)
                added.append(d)
            set_orient = None
            if ok and set_ordered and earlier[v]:
                u = earlier[v][0]
                low_side = side[u] if col[u] < c else side[v]
                k = comp_of[v]
                if orient[k] is None:
                    orient[k] = low_side
                    set_orient = k
                elif orient[k] != low_side:
                    ok = False
            if ok and set_ordered:
                cur = v
                ok = orientation_ok()
            if ok:
                yield from rec(v + 1)
            for d in added:
                used.discard(d)
            if set_orient is not None:
                orient[set_orient] = None
        col[v] = 0

    for vc in rec(1):
        f = TotalColoring.induced(G, vc)
        if set_ordered and set_ordered_sides(G, f) is None:
            # isolated vertices can still straddle the threshold
            continue
        yield f
        emitted += 1
        if limit is not None and emitted >= limit:
            return


def to_odd(G: Graph, f: TotalColoring) -> TotalColoring:
    """Set-ordered graceful colouring -> set-ordered odd-graceful colouring.

    Low side colours double, high side colours map to 2c-1, and each edge
    takes the difference high minus low.
    """
    if not verify(G, f, WType.SET_ORDERED_GRACEFUL):
        raise NotSetOrderedGraceful("to_odd needs a set-ordered graceful colouring")
    sides = set_ordered_sides(G, f)
    g = {v: 2 * f.vertex[v] if v in sides.low else 2 * f.vertex[v] - 1 for v in G.vertices}
    edges = {}
    for u, v in G.edges:
        a, b = (u, v) if u in sides.low else (v, u)
        edges[(u, v)] = g[b] - g[a]
    return TotalColoring(g, edges)


def from_odd(G: Graph, g: TotalColoring) -> TotalColoring:
    """Inverse of :func:`to_odd` (halve the low side, (c+1)/2 on the high side)."""
    if not verify(G, g, WType.SET_ORDERED_ODD_GRACEFUL):
        raise NotSetOrderedOddGraceful("from_odd needs a set-ordered odd-graceful colouring")
    sides = set_ordered_sides(G, g)
    f = {}
    for v in G.vertices:
        c = g.vertex[v]
        if v in sides.low:
            if c % 2:
                raise NotSetOrderedOddGraceful(f"low-side vertex {v} has odd colour {c}")
            f[v] = c // 2
        else:
            if c % 2 == 0:
                raise NotSetOrderedOddGraceful(f"high-side vertex {v} has even colour {c}")
            f[v] = (c + 1) // 2
    return TotalColoring.induced(G, f)


def dual(G: Graph, f: TotalColoring) -> TotalColoring:
    """Reflect vertex colours through max+min; edge colours are recomputed."""
    if not verify(G, f, WType.SET_ORDERED_GRACEFUL):
        raise NotSetOrderedGraceful("dual needs a set-ordered graceful colouring")
    s = max(f.vertex.values()) + min(f.vertex.values())
    return TotalColoring.induced(G, {v: s - c for v, c in f.vertex.items()})
