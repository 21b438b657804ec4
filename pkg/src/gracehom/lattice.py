"""Edge-join and vertex-coincide operations, lattice elements built from a
base of graphs, and homomorphisms carried through those constructions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Optional, Sequence

from .coloring import TotalColoring, WType
from .errors import BadJoinSpec, DuplicateJoin, EmptyElement, LoopRejected, NotHomomorphism, RegistryRejected, VertexOutOfRange
from .graph import Graph
from .homomorphism import ColoredHom, bad_edges, check_hom, colored_check

EDGE_JOIN = "ominus"
VERTEX_COINCIDE = "odot"
OPS = (EDGE_JOIN, VERTEX_COINCIDE)

JoinSpec = Sequence[tuple[int, int]]


def _check_spec(A: Graph, B: Graph, spec: JoinSpec) -> None:
    if not spec:
        raise BadJoinSpec("a join needs at least one vertex pair")
    for a, b in spec:
        if not 1 <= a <= A.p or not 1 <= b <= B.p:
            raise VertexOutOfRange(f"pair ({a},{b}) outside {A.p}x{B.p}")


def edge_join(A: Graph, B: Graph, spec: JoinSpec) -> Graph:
    """Disjoint union plus one new edge a-b' per pair (B's ids shift by p(A))."""
    _check_spec(A, B, spec)
    if len(set(spec)) != len(spec):
        raise DuplicateJoin(f"repeated pair in {list(spec)}")
    shift = A.p
    edges = list(A.edges) + [(u + shift, v + shift) for u, v in B.edges]
    edges += [(a, b + shift) for a, b in spec]
    return Graph(A.p + B.p, edges)


def _quotient(p: int, edges, merges) -> tuple[Graph, dict[int, int], bool]:
    """Identify vertex pairs in a p-vertex edge list.

    Returns the simple quotient graph (parallel edges collapsed, collapsed
    edges dropped), the map old id -> new id, and whether any edge collapsed
    into a loop. Classes are numbered by their smallest member.
    """
    parent = list(range(p + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in merges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots = sorted({find(x) for x in range(1, p + 1)})
    new_id = {r: i for i, r in enumerate(roots, start=1)}
    m = {x: new_id[find(x)] for x in range(1, p + 1)}
    loop = False
    out = set()
    for u, v in edges:
        a, b = m[u], m[v]
        if a == b:
            loop = True
        else:
            out.add((a, b))
    return Graph(len(roots), out), m, loop


def vertex_coincide(A: Graph, B: Graph, spec: JoinSpec) -> Graph:
    """Glue vertex a of A to vertex b of B for each pair; A's ids are kept and
    B's remaining vertices follow in order."""
    _check_spec(A, B, spec)
    lefts = [a for a, _ in spec]
    rights = [b for _, b in spec]
    if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
        raise BadJoinSpec("coincided vertices must be distinct on each side")
    G, _, loop = _coincide(A, B, spec)
    if loop:
        raise LoopRejected("identification collapses an edge")
    return G


def _coincide(A: Graph, B: Graph, spec: JoinSpec):
    shift = A.p
    edges = list(A.edges) + [(u + shift, v + shift) for u, v in B.edges]
    return _quotient(A.p + B.p, edges, [(a, b + shift) for a, b in spec])


@dataclass(frozen=True)
class Step:
    base: int  # 1-based index into the base sequence
    op: Optional[str] = None
    spec: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class LatticeElement:
    """Left-associated expression ((B_{k1} op2 B_{k2}) op3 B_{k3}) ...

    The spec of each step pairs vertices of the graph built so far with
    vertices of the newly added base graph.
    """

    steps: tuple[Step, ...] = field(default_factory=tuple)

    def coefficients(self, m: int) -> list[int]:
        a = [0] * m
        for s in self.steps:
            a[s.base - 1] += 1
        return a


def element(first: int, *rest: tuple[int, str, JoinSpec]) -> LatticeElement:
    steps = [Step(first)]
    for k, op, spec in rest:
        steps.append(Step(k, op, tuple(tuple(p) for p in spec)))
    return LatticeElement(tuple(steps))


def _validate(base: Sequence, e: LatticeElement) -> None:
    if not e.steps:
        raise EmptyElement("lattice element needs at least one base graph (sum of coefficients >= 1)")
    for i, s in enumerate(e.steps):
        if not 1 <= s.base <= len(base):
            raise VertexOutOfRange(f"base index {s.base} outside [1,{len(base)}]")
        if i == 0 and s.op is not None:
            raise BadJoinSpec("first step carries no operation")
        if i > 0 and s.op not in OPS:
            raise BadJoinSpec(f"unknown operation {s.op!r}")


def _graphs(base: Sequence) -> list[Graph]:
    return [b[0] if isinstance(b, tuple) else b for b in base]


def build(base: Sequence, e: LatticeElement) -> Graph:
    """Fold the expression left to right. ``base`` holds graphs or
    (graph, colouring) pairs; colourings play no part in the construction."""
    graphs = _graphs(base)
    _validate(graphs, e)
    G = graphs[e.steps[0].base - 1]
    for s in e.steps[1:]:
        B = graphs[s.base - 1]
        G = edge_join(G, B, s.spec) if s.op == EDGE_JOIN else vertex_coincide(G, B, s.spec)
    return G


class LatticeHom(NamedTuple):
    source: Graph
    image: Graph
    mapping: dict[int, int]
    verdict: bool
    collapsed: bool  # an identification in the image swallowed an edge


def lattice_hom(baseG: Sequence, baseH: Sequence, thetas: Sequence[Mapping[int, int]],
                e: LatticeElement) -> LatticeHom:
    """Carry per-base homomorphisms through a lattice element.

    The image element applies the same operations to the H-bases, with every
    spec pair pushed through the maps. The assembled vertex map is returned
    with its homomorphism verdict.
    """
    gs, hs = _graphs(baseG), _graphs(baseH)
    if not (len(gs) == len(hs) == len(thetas)):
        raise BadJoinSpec("bases and maps differ in length")
    for k, (G, H, th) in enumerate(zip(gs, hs, thetas), start=1):
        bad = bad_edges(G, H, th)
        if bad:
            raise NotHomomorphism(f"base map {k} breaks edges {bad[:5]}")
    _validate(gs, e)

    first = e.steps[0].base - 1
    S = gs[first]
    T = hs[first]
    m = {v: thetas[first][v] for v in S.vertices}
    collapsed = False
    for s in e.steps[1:]:
        k = s.base - 1
        B, BH, th = gs[k], hs[k], thetas[k]
        img_spec = [(m[a], th[b]) for a, b in s.spec]
        if s.op == EDGE_JOIN:
            S2 = edge_join(S, B, s.spec)
            sp, tp = S.p, T.p
            T = Graph(T.p + BH.p, list(T.edges) + [(u + tp, v + tp) for u, v in BH.edges]
                      + [(a, b + tp) for a, b in img_spec])
            m = {**m, **{v + sp: th[v] + tp for v in B.vertices}}
        else:
            vertex_coincide(S, B, s.spec)  # validates the source spec
            S2, smap, _ = _coincide(S, B, s.spec)
            T2, tmap, loop = _coincide(T, BH, img_spec)
            collapsed = collapsed or loop
            sp, tp = S.p, T.p
            new_m = {}
            for v in S.vertices:
                new_m[smap[v]] = tmap[m[v]]
            for v in B.vertices:
                new_m[smap[v + sp]] = tmap[th[v] + tp]
            m, T = new_m, T2
        S = S2
    m = dict(sorted(m.items()))
    # a collapsed edge means the image is not a simple graph, so no verdict of true
    return LatticeHom(S, T, m, check_hom(S, T, m) and not collapsed, collapsed)


@dataclass(frozen=True)
class RegistryEntry:
    source: Graph
    source_coloring: TotalColoring
    target_coloring: TotalColoring
    mapping: tuple[tuple[int, int], ...]

    def key(self):
        return (self.source, self.source_coloring.key(), self.target_coloring.key(), self.mapping)


class HomRegistry:
    """Catalogue of verified W-type homomorphisms into copies of one graph H,
    grouped by the colouring of the target copy.

    Selecting from the catalogue picks exactly one target copy (an indicator
    vector with a single 1).
    """

    def __init__(self, H: Graph, wtype: WType):
        self.H = H
        self.wtype = wtype
        self._entries: list[RegistryEntry] = []
        self._keys: set = set()

    def add(self, G: Graph, f: TotalColoring, g: TotalColoring, m: Mapping[int, int]) -> bool:
        """Verify and store; returns False for a duplicate, raises on failure."""
        rep = colored_check(ColoredHom(G, f, self.H, g, m, self.wtype))
        if not rep.passed:
            raise RegistryRejected("entry fails the coloured homomorphism check", rep)
        entry = RegistryEntry(G, f, g, tuple(sorted(m.items())))
        if entry.key() in self._keys:
            return False
        self._keys.add(entry.key())
        self._entries.append(entry)
        return True

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def targets(self) -> list[TotalColoring]:
        """Distinct target colourings, in insertion order."""
        seen, out = set(), []
        for e in self._entries:
            if e.target_coloring.key() not in seen:
                seen.add(e.target_coloring.key())
                out.append(e.target_coloring)
        return out

    def homs_to(self, g: TotalColoring) -> list[RegistryEntry]:
        return [e for e in self._entries if e.target_coloring == g]

    def select(self, indicator: Sequence[int]) -> list[RegistryEntry]:
        ts = self.targets()
        if len(indicator) != len(ts) or any(a not in (0, 1) for a in indicator) or sum(indicator) != 1:
            raise ValueError("selection needs a 0/1 vector over the targets summing to 1")
        return self.homs_to(ts[list(indicator).index(1)])

    def contains(self, G: Graph, f: TotalColoring, g: TotalColoring, m: Mapping[int, int]) -> bool:
        return RegistryEntry(G, f, g, tuple(sorted(m.items()))).key() in self._keys


def union(registries: Sequence[HomRegistry]) -> list[RegistryEntry]:
    """All entries across several W_k registries, duplicates dropped."""
    seen, out = set(), []
    for r in registries:
        for e in r:
            key = (r.wtype, e.key())
            if key not in seen:
                seen.add(key)
                out.append(e)
    return out
