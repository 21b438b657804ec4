"""Growing graph sequence G_0, G_1, ... and the homomorphism chain between the
starred graphs G*_n = G_n + K_1.

Step 1 hangs a new vertex on every seed edge (joined to both ends). Step
k >= 2 does the same for every edge whose end labels are {k-1, k-2}. New
vertices get label k and ids following the previous stage, so each stage's
vertex ids are a prefix of the next stage's.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import FoldUndefined, SeedDisconnected, StageMismatch
from .graph import Graph, complete, disjoint_union
from .homomorphism import compose


@dataclass(frozen=True)
class LabeledStage:
    graph: Graph
    labels: Mapping[int, int]
    stage: int


def grow(seed: Graph | None = None, n: int = 0) -> list[LabeledStage]:
    """Return stages G_0..G_n. The default seed is the triangle."""
    seed = complete(3) if seed is None else seed
    if not seed.is_connected():
        raise SeedDisconnected("seed graph must be connected")
    if n < 0:
        raise ValueError("step count must be non-negative")
    labels = {v: 0 for v in seed.vertices}
    stages = [LabeledStage(seed, dict(labels), 0)]
    G = seed
    for k in range(1, n + 1):
        want = {0} if k == 1 else {k - 1, k - 2}
        hosts = [(a, b) for a, b in G.edges if {labels[a], labels[b]} == want]
        p = G.p
        new_edges = list(G.edges)
        for a, b in hosts:
            p += 1
            labels[p] = k
            new_edges += [(a, p), (b, p)]
        G = Graph(p, new_edges)
        stages.append(LabeledStage(G, dict(labels), k))
    return stages


def check_stage(stage: LabeledStage) -> list[str]:
    """Problems with the label invariants of one stage (empty list = fine)."""
    G, h, n = stage.graph, stage.labels, stage.stage
    problems = []
    if set(h) != set(G.vertices):
        problems.append("labels do not cover exactly the vertices")
        return problems
    for v in G.vertices:
        k = h[v]
        if not 0 <= k <= n:
            problems.append(f"vertex {v} has label {k} outside [0,{n}]")
            continue
        if k == 0:
            continue
        older = sorted(h[u] for u in G.adjacency[v] if h[u] < k)
        want = [0, 0] if k == 1 else [k - 2, k - 1]
        if older != want:
            problems.append(f"vertex {v} (label {k}) has older neighbour labels {older}, want {want}")
    return problems


def starred(stage: LabeledStage) -> Graph:
    """G_n plus one isolated vertex z0 (id p+1)."""
    return disjoint_union(stage.graph, Graph(1))


def _pair(stages: Sequence[LabeledStage], n: int) -> tuple[LabeledStage, LabeledStage]:
    if not 1 <= n < len(stages):
        raise StageMismatch(f"no stage pair ({n - 1}, {n}) in a run of {len(stages)} stages")
    old, new = stages[n - 1], stages[n]
    if old.stage != n - 1 or new.stage != n:
        raise StageMismatch("stages are out of order")
    if not old.graph.edge_set <= new.graph.edge_set or old.graph.p > new.graph.p:
        raise StageMismatch(f"stage {n - 1} is not contained in stage {n}")
    if any(new.labels.get(v) != old.labels[v] for v in old.graph.vertices):
        raise StageMismatch("labels changed between stages")
    return old, new


def collapse_theta(stages: Sequence[LabeledStage], n: int) -> dict[int, int]:
    """G*_n -> G*_{n-1}: the vertices added at step n go to z0, everything else
    is fixed (z0 goes to z0). Reported, not assumed, to be a homomorphism."""
    old, new = _pair(stages, n)
    z_old, z_new = old.graph.p + 1, new.graph.p + 1
    m = {v: v for v in old.graph.vertices}
    for v in range(old.graph.p + 1, new.graph.p + 1):
        m[v] = z_old
    m[z_new] = z_old
    return m


def fold_theta(stages: Sequence[LabeledStage], n: int) -> dict[int, int]:
    """G*_n -> G*_{n-1}: every vertex added at step n folds onto the
    lowest-id common neighbour (in G_{n-1}) of the two ends of its host edge;
    older vertices and z0 are fixed."""
    old, new = _pair(stages, n)
    G_old, G_new = old.graph, new.graph
    m = {v: v for v in G_old.vertices}
    for v in range(G_old.p + 1, G_new.p + 1):
        a, b = sorted(G_new.adjacency[v])
        common = sorted((G_old.adjacency[a] & G_old.adjacency[b]))
        if not common:
            raise FoldUndefined(f"host edge {a}-{b} of vertex {v} lies in no triangle")
        m[v] = common[0]
    m[G_new.p + 1] = G_old.p + 1
    return m


def chain(stages: Sequence[LabeledStage]) -> dict[int, int]:
    """Compose the fold maps G*_n -> ... -> G*_0 for the last stage n."""
    n = len(stages) - 1
    total = {v: v for v in range(1, stages[n].graph.p + 2)}
    for k in range(n, 0, -1):
        total = compose(total, fold_theta(stages, k))
    return total
