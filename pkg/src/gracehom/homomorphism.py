"""Graph homomorphisms: checking, searching, and totally-coloured variants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional

from .coloring import TotalColoring, WType, check_total, condition_report, set_ordered_sides
from .errors import MappingIncomplete, NotHomomorphism, NotSubgraph, VertexOutOfRange
from .graph import Graph
from .report import VerifyReport

VertexMapping = Mapping[int, int]


def _check_total_map(G: Graph, H: Graph, m: VertexMapping) -> None:
    missing = [v for v in G.vertices if v not in m]
    if missing:
        raise MappingIncomplete(f"no image for vertices {missing}")
    bad = [v for v in G.vertices if not 1 <= m[v] <= H.p]
    if bad:
        raise VertexOutOfRange(f"images of {bad} are not vertices of the target")


def bad_edges(G: Graph, H: Graph, m: VertexMapping) -> list[tuple[int, int]]:
    """Source edges whose image is not an edge (a loop counts as not an edge)."""
    _check_total_map(G, H, m)
    return [(u, v) for u, v in G.edges if not H.has_edge(m[u], m[v])]


def check_hom(G: Graph, H: Graph, m: VertexMapping) -> bool:
    return not bad_edges(G, H, m)


def _require_hom(G, H, m):
    bad = bad_edges(G, H, m)
    if bad:
        raise NotHomomorphism(f"edges {bad[:5]} are not mapped onto edges")


def is_faithful(G: Graph, H: Graph, m: VertexMapping) -> bool:
    """The image subgraph is induced: H has no edge between image vertices
    other than the images of G's edges."""
    _require_hom(G, H, m)
    image_edges = {tuple(sorted((m[u], m[v]))) for u, v in G.edges}
    return H.induced(set(m[v] for v in G.vertices)) == image_edges


def is_full(G: Graph, H: Graph, m: VertexMapping) -> bool:
    """uv is an edge of G iff m(u)m(v) is an edge of H, over all pairs u != v."""
    _require_hom(G, H, m)
    for u in G.vertices:
        for v in range(u + 1, G.p + 1):
            if G.has_edge(u, v) != H.has_edge(m[u], m[v]):
                return False
    return True


def partition_check(G: Graph, H: Graph, m: VertexMapping) -> bool:
    """Homomorphism test through the preimage partition S_h = m^-1(h).

    Each S_h must be independent (H is loopless), and for non-adjacent
    h != h' there must be no G-edge between S_h and S_h'.
    """
    _check_total_map(G, H, m)
    parts: dict[int, set[int]] = {}
    for v in G.vertices:
        parts.setdefault(m[v], set()).add(v)
    for h, S in parts.items():
        if G.induced(S):
            return False
    keys = sorted(parts)
    for i, h in enumerate(keys):
        for h2 in keys[i + 1:]:
            if H.has_edge(h, h2):
                continue
            for x in parts[h]:
                if G.adjacency[x] & parts[h2]:
                    return False
    return True


def iter_homs(G: Graph, H: Graph, limit: Optional[int] = None) -> Iterator[dict[int, int]]:
    """Backtracking homomorphism search.

    G's vertices are taken in degree-descending order (ties by id). A value
    for v must be adjacent in H to the image of every mapped neighbour of v;
    after each assignment the remaining domains of v's unmapped neighbours
    are filtered and the branch is cut if one empties.
    """
    if limit is not None and limit <= 0:
        return
    order = sorted(G.vertices, key=lambda v: (-G.degree(v), v))
    domains: dict[int, list[int]] = {v: list(H.vertices) for v in G.vertices}
    m: dict[int, int] = {}
    count = 0

    def rec(i: int, domains):
        if i == len(order):
            yield dict(sorted(m.items()))
            return
        v = order[i]
        for h in domains[v]:
            m[v] = h
            new = domains
            ok = True
            for u in G.adjacency[v]:
                if u in m:
                    continue
                filtered = [x for x in new[u] if x in H.adjacency[h]]
                if not filtered:
                    ok = False
                    break
                if new is domains:
                    new = dict(domains)
                new[u] = filtered
            if ok:
                yield from rec(i + 1, new)
            del m[v]

    for hom in rec(0, domains):
        yield hom
        count += 1
        if limit is not None and count >= limit:
            return


def find_homs(G: Graph, H: Graph, limit: Optional[int] = None) -> list[dict[int, int]]:
    return list(iter_homs(G, H, limit))


def hom_equivalent(G: Graph, H: Graph) -> bool:
    return bool(find_homs(G, H, 1)) and bool(find_homs(H, G, 1))


def is_retraction(G: Graph, H_sub: Iterable[int], m: VertexMapping) -> bool:
    """m retracts G onto the subgraph induced by H_sub and fixes H_sub."""
    S = set(H_sub)
    if not S or any(not 1 <= x <= G.p for x in S):
        raise NotSubgraph(f"{sorted(S)} is not a vertex subset of the graph")
    missing = [v for v in G.vertices if v not in m]
    if missing:
        raise MappingIncomplete(f"no image for vertices {missing}")
    if any(m[v] not in S for v in G.vertices):
        return False
    if any(m[x] != x for x in S):
        return False
    return all(G.has_edge(m[u], m[v]) for u, v in G.edges)


def compose(first: VertexMapping, second: VertexMapping) -> dict[int, int]:
    """Apply ``first`` then ``second``."""
    return {v: second[first[v]] for v in first}


@dataclass(frozen=True)
class ColoredHom:
    source: Graph
    source_coloring: TotalColoring
    target: Graph
    target_coloring: TotalColoring
    mapping: Mapping[int, int]
    wtype: WType


def colored_check(h: ColoredHom) -> VerifyReport:
    """Verify a totally-coloured homomorphism of the given W-type.

    Checks the underlying homomorphism, each colouring against the W-type,
    edge-colour agreement along the map (C-3), equality of the two edge
    colour sets, and for set-ordered types that low sides map to low sides.
    """
    G, f, H, g, m, w = h.source, h.source_coloring, h.target, h.target_coloring, h.mapping, h.wtype
    check_total(G, f)
    check_total(H, g)
    _require_hom(G, H, m)
    rep = VerifyReport()
    rep.add("hom", True)
    rep.extend(condition_report(G, f, w.conditions), prefix="G:")
    rep.extend(condition_report(H, g, w.conditions), prefix="H:")
    if w.graceful_family:
        bad = [(u, v) for u, v in G.edges if f.edge[(u, v)] != g((m[u], m[v]))]
        rep.add("C-3", not bad, f"edge colours differ on {bad[:5]}" if bad else "")
        fe = set(f.edge.values())
        ge = set(g.edge.values())
        cond = "C-7" if w.odd else "C-6"
        rep.add(f"{cond}:f(E(G))=g(E(H))", fe == ge, "" if fe == ge else f"{sorted(fe)} vs {sorted(ge)}")
    if w.set_ordered:
        sg = set_ordered_sides(G, f)
        sh = set_ordered_sides(H, g)
        if sg is None or sh is None:
            rep.add("C-1:sides", False, "a colouring is not set-ordered")
        else:
            wrong = [
                v for v in G.vertices
                if G.degree(v) > 0 and ((v in sg.low) != (m[v] in sh.low))
            ]
            rep.add("C-1:sides", not wrong, f"vertices {wrong[:5]} change side" if wrong else "")
    return rep
