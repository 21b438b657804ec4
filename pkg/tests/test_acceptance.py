"""Acceptance suite. Each criterion prints one line
"ACCEPTANCE <n> PASS|FAIL <detail>".

Run with pytest, or directly: python3 tests/test_acceptance.py
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from pathlib import Path

import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import all_graphs, all_trees, random_graph  # noqa: E402
from gracehom import oracle  # noqa: E402
from gracehom.coloring import TotalColoring, WType, from_odd, search, to_odd, verify  # noqa: E402
from gracehom.graph import Graph, cycle, is_isomorphic, star  # noqa: E402
from gracehom.group import add, generate, verify_every_zero  # noqa: E402
from gracehom.homomorphism import check_hom, find_homs, is_faithful, partition_check  # noqa: E402
from gracehom.lattice import EDGE_JOIN, VERTEX_COINCIDE, HomRegistry, element, lattice_hom  # noqa: E402
from gracehom.samples import REFERENCE_NUMBER_STRING, REFERENCE_TOPCODE  # noqa: E402
from gracehom.sequence import chain, collapse_theta, fold_theta, grow, starred  # noqa: E402
from gracehom.topcode import (decode, distinct_shapes, encode, maximal_merge, merge_map,  # noqa: E402
                              nsd_solve, to_string)

SO = WType.SET_ORDERED_GRACEFUL


def criterion_1():
    mm = maximal_merge(REFERENCE_TOPCODE, SO)
    T = encode(mm.graph, mm.coloring, SO)
    cells = sum(a == b for a, b in zip(T.cells(), REFERENCE_TOPCODE.cells()))
    ok = T.rows() == REFERENCE_TOPCODE.rows()
    return ok, f"{cells}/30 cells match after decode->encode (maximal merge p={mm.graph.p} q={mm.graph.q})"


def criterion_2():
    mm = maximal_merge(REFERENCE_TOPCODE, SO)
    connected = decode(REFERENCE_TOPCODE, SO, connected_only=True)
    shapes = distinct_shapes(connected)
    # confirm pairwise non-isomorphism of the shape representatives with networkx too
    nxs = [nx.Graph(c.graph.edges) for c in shapes[:8]]
    pairwise = all(not nx.is_isomorphic(a, b) for a, b in itertools.combinations(nxs, 2))
    reg = HomRegistry(mm.graph, SO)
    for c in connected[1:]:
        m = merge_map(c, mm)
        if m is not None:
            reg.add(c.graph, c.coloring, mm.coloring, m)
    ok = len(shapes) >= 6 and pairwise and len(reg) >= 5
    return ok, (f"{len(connected)} connected candidates, {len(shapes)} non-isomorphic shapes, "
                f"{len(reg)} verified set-ordered graceful homs onto the maximal merge")


def criterion_3():
    rng = random.Random(2024)
    hom_bad = 0
    for _ in range(50):
        G, H = random_graph(rng, rng.randint(1, 5)), random_graph(rng, rng.randint(1, 5))
        if len(find_homs(G, H)) != len(oracle.all_homs(G, H)):
            hom_bad += 1
    col_bad = tried = 0
    while tried < 25:
        G = random_graph(rng, rng.randint(2, 6), 0.4)
        if not 1 <= G.q <= 5:
            continue
        tried += 1
        fast = sorted(f.vertex_vector(G) for f in search(G, WType.GRACEFUL))
        if fast != oracle.all_graceful_vertex_colorings(G):
            col_bad += 1
    ok = hom_bad == 0 and col_bad == 0
    return ok, f"hom count mismatches {hom_bad}/50, colouring mismatches {col_bad}/25"


def criterion_4():
    gs = all_graphs(4)
    maps = mism = 0
    for G in gs:
        for H in gs:
            for images in itertools.product(H.vertices, repeat=G.p):
                m = dict(zip(G.vertices, images))
                maps += 1
                if check_hom(G, H, m) != partition_check(G, H, m):
                    mism += 1
    return mism == 0, f"{len(gs)} graphs, {maps} maps, {mism} mismatches"


def criterion_5():
    total = failures = 0
    trees = all_trees(9)
    for G in trees:
        odd_edges = list(range(1, 2 * G.q, 2))
        for f in search(G, SO):
            total += 1
            g = to_odd(G, f)
            good = (verify(G, g, WType.SET_ORDERED_ODD_GRACEFUL).passed
                    and sorted(g.edge.values()) == odd_edges and from_odd(G, g) == f)
            failures += not good
    ok = failures == 0 and total > 0
    return ok, f"{len(trees)} trees, {total} set-ordered graceful colourings, {failures} failures"


def criterion_6():
    stages = grow(None, 8)
    steps_ok = all(check_hom(starred(stages[n]), starred(stages[n - 1]), fold_theta(stages, n))
                   for n in range(1, 9))
    composed = check_hom(starred(stages[8]), starred(stages[0]), chain(stages))
    sizes = all((stages[n].graph.p, stages[n].graph.q) == (6 * n, 12 * n - 3) for n in range(1, 9))
    collapse = [check_hom(starred(stages[n]), starred(stages[n - 1]), collapse_theta(stages, n))
                for n in range(1, 9)]
    ok = steps_ok and composed and sizes
    return ok, (f"fold steps {'pass' if steps_ok else 'fail'}, composed G*_8->G*_0 "
                f"{'pass' if composed else 'fail'}, sizes {'match' if sizes else 'differ'}; "
                f"verbatim z0 map passes {sum(collapse)}/8 steps (expected 0)")


def _samples():
    mm = maximal_merge(REFERENCE_TOPCODE, SO)
    S3 = star(3)
    C4 = cycle(4)
    return [
        (mm.graph, mm.coloring),
        (S3, search(S3, SO, limit=1)[0]),
        (C4, TotalColoring.induced(C4, {1: 1, 2: 4, 3: 2, 4: 5})),
    ]


def criterion_7():
    failures = triples = 0
    for G, f in _samples():
        for M in range(2, 13):
            g = generate(G, f, M)
            rep = verify_every_zero(g)
            failures += len(rep.failures())
            for i, j, k in itertools.product(range(1, M + 1), repeat=3):
                triples += 1
                l = add(g, i, j, k)
                for v in G.vertices:
                    lhs = g.element(i).vertex[v] + g.element(j).vertex[v] - g.element(k).vertex[v]
                    if (lhs - g.element(l).vertex[v]) % M:
                        failures += 1
    return failures == 0, f"3 colourings x M=2..12, {triples} triples, {failures} failures"


def _image_collapses(T1, T2, img_spec):
    # independent loop test: merge the image pairs with networkx components
    merge = nx.Graph()
    merge.add_nodes_from(range(1, T1.p + T2.p + 1))
    merge.add_edges_from((a, b + T1.p) for a, b in img_spec)
    cls = {}
    for i, comp in enumerate(nx.connected_components(merge)):
        for x in comp:
            cls[x] = i
    edges = list(T1.edges) + [(u + T1.p, v + T1.p) for u, v in T2.edges]
    return any(cls[u] == cls[v] for u, v in edges)


def criterion_8():
    rng = random.Random(77)
    safe = safe_true = adversarial = detected = 0
    while safe < 100:
        base_g, base_h, thetas = [], [], []
        for _ in range(2):
            while True:
                G = random_graph(rng, rng.randint(1, 6), 0.4)
                H = random_graph(rng, rng.randint(2, 6), 0.6)
                homs = find_homs(G, H, 50)
                if homs:
                    break
            base_g.append(G)
            base_h.append(H)
            thetas.append(rng.choice(homs))
        k1, k2 = rng.randint(1, 2), rng.randint(1, 2)
        A, B = base_g[k1 - 1], base_g[k2 - 1]
        op = rng.choice((EDGE_JOIN, VERTEX_COINCIDE))
        n = rng.randint(1, min(A.p, B.p, 3))
        if op == EDGE_JOIN:
            spec = list({(rng.randint(1, A.p), rng.randint(1, B.p)) for _ in range(n)})
        else:
            spec = list(zip(rng.sample(list(A.vertices), n), rng.sample(list(B.vertices), n)))
        e = element(k1, (k2, op, spec))
        lh = lattice_hom(base_g, base_h, thetas, e)
        img = [(thetas[k1 - 1][a], thetas[k2 - 1][b]) for a, b in spec]
        loops = op == VERTEX_COINCIDE and _image_collapses(base_h[k1 - 1], base_h[k2 - 1], img)
        if loops:
            adversarial += 1
            detected += (lh.collapsed and not lh.verdict)
        else:
            safe += 1
            safe_true += lh.verdict and check_hom(lh.source, lh.image, lh.mapping)
    # one hand-built loop case: glued P3 ends land on the two ends of K2
    P3, P2 = Graph(3, [(1, 2), (2, 3)]), Graph(2, [(1, 2)])
    lh = lattice_hom([P3], [P2], [{1: 1, 2: 2, 3: 1}], element(1, (1, VERTEX_COINCIDE, [(1, 3), (3, 2)])))
    adversarial += 1
    detected += lh.collapsed and not lh.verdict
    ok = safe_true == safe and detected == adversarial and adversarial > 1
    return ok, f"{safe_true}/{safe} loop-safe verdicts true, {detected}/{adversarial} loop cases detected"


def _round_trip_instances(cap=200):
    graphs = [G for G in all_graphs(6) if 1 <= G.q <= 5]
    pools = [iter(search(G, WType.GRACEFUL)) for G in graphs]
    out = []
    # round-robin over graphs so the cap covers many shapes
    while pools and len(out) < cap:
        alive = []
        for G, it in zip(graphs, pools):
            f = next(it, None)
            if f is not None:
                out.append((G, f))
                alive.append((G, it))
                if len(out) >= cap:
                    break
        graphs, pools = [a for a, _ in alive], [b for _, b in alive]
    return out


def criterion_9():
    instances = _round_trip_instances()
    missed = slow = 0
    worst = 0.0
    for G, f in instances:
        T = encode(G, f)
        start = time.perf_counter()
        sols = nsd_solve(to_string(T), G.q)
        dt = time.perf_counter() - start
        worst = max(worst, dt)
        slow += dt >= 10
        missed += T not in [s.matrix for s in sols]
    s1 = nsd_solve(REFERENCE_NUMBER_STRING, REFERENCE_TOPCODE.q, SO)
    canon = to_string(REFERENCE_TOPCODE)
    ok = missed == 0 and slow == 0 and not s1
    return ok, (f"{len(instances)} instances, {missed} not recovered, worst {worst:.3f}s; "
                f"published string NoSolution ({len(REFERENCE_NUMBER_STRING)} digits vs "
                f"{len(canon)} for the matrix)" if not s1 else f"published string solved ({len(s1)})")


def criterion_10():
    gs = all_graphs(5)
    found = bad = 0
    for G in gs:
        for H in gs:
            if G.p != H.p:
                continue
            for m in find_homs(G, H):
                if len(set(m.values())) == G.p and is_faithful(G, H, m):
                    found += 1
                    if not (is_isomorphic(G, H) and oracle.isomorphic(G, H)):
                        bad += 1
    return bad == 0 and found > 0, f"{found} faithful bijective homs, {bad} counterexamples"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _line(n, ok, detail):
    return f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'} {detail}"


@pytest.mark.parametrize("n", range(1, 11))
def test_acceptance(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    with capsys.disabled():
        print("\n" + _line(n, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for n, crit in enumerate(CRITERIA, start=1):
        ok, detail = crit()
        failed += not ok
        print(_line(n, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
