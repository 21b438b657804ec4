"""Every-zero graphic groups.

From a coloured graph (G, f) and a modulus M we build M colourings
f_1 = f, f_i(x) = (f(x) + i - 1) mod M on vertices for i >= 2, with edge
colours carried unchanged. Any element G_k can serve as the zero of

    G_i (+)_k G_j = G_l,   f_i(x) + f_j(x) - f_k(x) = f_l(x)  (mod M),
    l = i + j - k (mod M), kept in [1, M].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .coloring import TotalColoring, WType, check_total, verify
from .errors import ArityMismatch, BadIndex, BadModulus
from .graph import Graph
from .homomorphism import bad_edges
from .report import VerifyReport


@dataclass(frozen=True)
class GraphicGroup:
    graph: Graph
    base: TotalColoring
    modulus: int
    elements: tuple[TotalColoring, ...]

    def element(self, i: int) -> TotalColoring:
        _check_index(self, i)
        return self.elements[i - 1]

    def residues(self, i: int) -> tuple[int, ...]:
        f = self.element(i)
        return tuple(f.vertex[v] % self.modulus for v in self.graph.vertices)

    @cached_property
    def residue_table(self) -> dict[int, tuple[int, ...]]:
        return {i: self.residues(i) for i in range(1, self.modulus + 1)}


def generate(G: Graph, f: TotalColoring, M: int) -> GraphicGroup:
    if M < 1:
        raise BadModulus(f"modulus must be at least 1, got {M}")
    check_total(G, f)
    elements = [f]
    for i in range(2, M + 1):
        vc = {v: (c + i - 1) % M for v, c in f.vertex.items()}
        elements.append(TotalColoring(vc, dict(f.edge)))
    return GraphicGroup(G, f, M, tuple(elements))


def _check_index(g: GraphicGroup, *idx: int) -> None:
    for i in idx:
        if not 1 <= i <= g.modulus:
            raise BadIndex(f"index {i} outside [1,{g.modulus}]")


def add(g: GraphicGroup, i: int, j: int, k: int) -> int:
    """Index of G_i (+) G_j with G_k as zero."""
    _check_index(g, i, j, k)
    return (i + j - k - 1) % g.modulus + 1


def combine(g: GraphicGroup, i: int, j: int, k: int) -> Optional[int]:
    """Compute f_i + f_j - f_k pointwise (mod M) and look up which element it
    is; None when no element matches (closure failure)."""
    _check_index(g, i, j, k)
    M = g.modulus
    res = g.residue_table
    target = tuple((a + b - c) % M for a, b, c in zip(res[i], res[j], res[k]))
    hits = [l for l in range(1, M + 1) if res[l] == target]
    return hits[0] if len(hits) == 1 else None


def verify_every_zero(g: GraphicGroup, wtype: Optional[WType] = None) -> VerifyReport:
    """Exhaustive axiom sweep over all zeros k and all index pairs/triples.

    The group operation is taken from the stored colourings (via
    :func:`combine`), so a tampered element shows up both as a failed
    pointwise identity and as broken axioms. With ``wtype`` the W-type
    status of every element is listed too, for information only.
    """
    M = g.modulus
    G = g.graph
    rep = VerifyReport()
    idx = range(1, M + 1)

    table: dict[tuple[int, int, int], Optional[int]] = {}
    for k in idx:
        for i in idx:
            for j in idx:
                table[(i, j, k)] = combine(g, i, j, k)

    pointwise = [
        (i, j, k) for (i, j, k), l in table.items() if l != add(g, i, j, k)
    ]
    rep.add("pointwise", not pointwise,
            f"{len(pointwise)} (i,j,k) break f_i+f_j-f_k = f_l (mod M), first {pointwise[:3]}"
            if pointwise else f"{M ** 3} triples")

    closure = [key for key, l in table.items() if l is None]
    rep.add("closure", not closure, f"{len(closure)} combinations fall outside the set" if closure else "")

    comm = [(i, j, k) for (i, j, k), l in table.items() if l != table[(j, i, k)]]
    rep.add("commutativity", not comm, f"first failures {comm[:3]}" if comm else "")

    assoc = []
    for k in idx:
        for i in idx:
            for j in idx:
                ij = table[(i, j, k)]
                for s in idx:
                    js = table[(j, s, k)]
                    left = table[(ij, s, k)] if ij is not None else None
                    right = table[(i, js, k)] if js is not None else None
                    if left is None or left != right:
                        assoc.append((i, j, s, k))
    rep.add("associativity", not assoc, f"first failures {assoc[:3]}" if assoc else f"{M ** 4} checks")

    zero = [(i, k) for k in idx for i in idx if table[(i, k, k)] != i]
    rep.add("every-zero", not zero, f"first failures {zero[:3]}" if zero else "")

    inverse = []
    for k in idx:
        for i in idx:
            inv = (2 * k - i - 1) % M + 1
            if table[(i, inv, k)] != k:
                inverse.append((i, k))
    rep.add("inverse", not inverse, f"first failures {inverse[:3]}" if inverse else "")

    edge_bad = [
        i for i in idx
        if any(g.element(i).edge[e] % M != g.base.edge[e] % M for e in G.edges)
    ]
    rep.add("edge-mod", not edge_bad, f"elements {edge_bad} change edge colours mod M" if edge_bad else "")

    if wtype is not None:
        status = [i for i in idx if verify(G, g.element(i), wtype).passed]
        rep.add(f"info:{wtype.value}", True, f"elements passing: {status}")
    return rep


def group_hom(gG: GraphicGroup, gH: GraphicGroup, thetas: Sequence) -> VerifyReport:
    """Check the element-wise maps theta_i : G_i -> H_i and that the index
    correspondence i -> i carries every (+)_k of one group to the other."""
    M = gG.modulus
    if len(thetas) != M:
        raise ArityMismatch(f"{len(thetas)} maps for {M} elements")
    if gH.modulus != M:
        raise BadModulus(f"moduli differ: {M} vs {gH.modulus}")
    rep = VerifyReport()
    for i, theta in enumerate(thetas, start=1):
        bad = bad_edges(gG.graph, gH.graph, theta)
        rep.add(f"theta_{i}", not bad, f"edges {bad[:5]} not preserved" if bad else "")
    idx = range(1, M + 1)
    mism = [
        (i, j, k) for k in idx for i in idx for j in idx
        if combine(gG, i, j, k) != combine(gH, i, j, k)
    ]
    rep.add("operation", not mism, f"first mismatches {mism[:3]}" if mism else "")
    return rep
