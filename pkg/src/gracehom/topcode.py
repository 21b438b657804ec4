"""Topcode-matrices: a 3 x q integer matrix with one column per edge
(end colour, edge colour, other end colour).

Colourings are encoded, matrices decoded back into every consistent
coloured graph, serialised as decimal number strings, and number strings
segmented back into matrices.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

from .coloring import TotalColoring, WType, edge_color_set, vertex_range, verify
from .errors import FormatError, InvalidColoring, LengthInfeasible, MatrixInvalid, NotBipartite
from .graph import Graph, bipartition, invariant_key, is_isomorphic
from .homomorphism import ColoredHom, colored_check


@dataclass(frozen=True)
class TopcodeMatrix:
    top: tuple[int, ...]
    mid: tuple[int, ...]
    bot: tuple[int, ...]

    def __init__(self, top: Sequence[int], mid: Sequence[int], bot: Sequence[int]):
        if not len(top) == len(mid) == len(bot):
            raise MatrixInvalid("rows differ in length")
        object.__setattr__(self, "top", tuple(int(x) for x in top))
        object.__setattr__(self, "mid", tuple(int(x) for x in mid))
        object.__setattr__(self, "bot", tuple(int(x) for x in bot))

    @property
    def q(self) -> int:
        return len(self.mid)

    @property
    def columns(self) -> list[tuple[int, int, int]]:
        return list(zip(self.top, self.mid, self.bot))

    @classmethod
    def from_columns(cls, cols) -> TopcodeMatrix:
        cols = list(cols)
        return cls([c[0] for c in cols], [c[1] for c in cols], [c[2] for c in cols])

    def sorted(self) -> TopcodeMatrix:
        """Columns ordered by edge colour (then end colours)."""
        return TopcodeMatrix.from_columns(sorted(self.columns, key=lambda c: (c[1], c[0], c[2])))

    def cells(self) -> list[int]:
        """Column-major cell list: top, mid, bot of column 1, then column 2, ..."""
        return [x for col in self.columns for x in col]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return (self.top, self.mid, self.bot)


def validate(T: TopcodeMatrix, wtype: WType = WType.GRACEFUL) -> None:
    if not wtype.graceful_family:
        raise MatrixInvalid("matrices carry graceful-family colourings only")
    q = T.q
    if q == 0:
        raise MatrixInvalid("empty matrix")
    for c, (a, d, b) in enumerate(T.columns, start=1):
        if d != abs(a - b):
            raise MatrixInvalid(f"column {c}: edge colour {d} != |{a}-{b}|")
    if sorted(T.mid) != sorted(edge_color_set(wtype, q)):
        raise MatrixInvalid(f"edge colours {sorted(T.mid)} are not {sorted(edge_color_set(wtype, q))}")
    lo, hi = vertex_range(wtype, q)
    bad = sorted({x for x in T.top + T.bot if not lo <= x <= hi})
    if bad:
        raise MatrixInvalid(f"vertex colours {bad} outside [{lo},{hi}]")
    if wtype.set_ordered and not max(T.top) < min(T.bot):
        raise MatrixInvalid("set-ordered matrix needs max(top row) < min(bottom row)")


def encode(G: Graph, f: TotalColoring, wtype: Optional[WType] = None) -> TopcodeMatrix:
    """One column per edge: smaller end colour on top, edge colour in the
    middle, larger end colour below; columns sorted by edge colour. For
    set-ordered colourings the top row is the low side X."""
    if wtype is not None:
        if wtype.set_ordered and bipartition(G) is None:
            raise NotBipartite("set-ordered encoding needs a bipartite graph")
        rep = verify(G, f, wtype)
        if not rep.passed:
            raise InvalidColoring(f"colouring is not {wtype.value}: {rep.failures()[0]}")
    cols = []
    for u, v in G.edges:
        a, b = sorted((f.vertex[u], f.vertex[v]))
        cols.append((a, f.edge[(u, v)], b))
    return TopcodeMatrix.from_columns(cols).sorted()


class Candidate(NamedTuple):
    graph: Graph
    coloring: TotalColoring
    columns: tuple[tuple[int, int], ...]  # (top vertex, bottom vertex) per matrix column


def _set_partitions(n: int) -> Iterator[list[int]]:
    """Restricted growth strings of length n, coarsest (all zero) first."""
    a = [0] * n

    def rec(i: int, mx: int):
        if i == n:
            yield list(a)
            return
        for b in range(mx + 2):
            a[i] = b
            yield from rec(i + 1, max(mx, b))

    if n == 0:
        yield []
    else:
        yield from rec(1, 0)


def iter_decode(T: TopcodeMatrix, wtype: WType = WType.GRACEFUL,
                connected_only: bool = False) -> Iterator[Candidate]:
    """Every simple coloured graph whose encoding is T.

    Endpoint slots with the same colour may or may not be the same vertex;
    each choice is a set partition of that colour's slots. The first
    candidate merges every colour class into one vertex. Because edge colours
    in a valid matrix are pairwise distinct, a colour-preserving isomorphism
    must fix every column, so distinct slot partitions are never isomorphic
    as coloured graphs; the duplicate filter below is a guard only.
    """
    validate(T, wtype)
    q = T.q
    # slot s < q is the top end of column s, slot q+s the bottom end
    slot_color = list(T.top) + list(T.bot)
    groups: dict[int, list[int]] = {}
    for s, c in enumerate(slot_color):
        groups.setdefault(c, []).append(s)
    colors = sorted(groups)
    seen = set()
    for choice in itertools.product(*(_set_partitions(len(groups[c])) for c in colors)):
        blocks: dict[tuple[int, int], list[int]] = {}
        for c, rgs in zip(colors, choice):
            for s, b in zip(groups[c], rgs):
                blocks.setdefault((c, b), []).append(s)
        order = sorted(blocks.values(), key=lambda ss: (slot_color[ss[0]], ss[0]))
        vid = {}
        for i, ss in enumerate(order, start=1):
            for s in ss:
                vid[s] = i
        cols = tuple((vid[c], vid[q + c]) for c in range(q))
        pairs = {tuple(sorted(e)) for e in cols}
        if len(pairs) != q or any(a == b for a, b in cols):
            continue
        if cols in seen:
            continue
        seen.add(cols)
        G = Graph(len(order), cols)
        if connected_only and not G.is_connected():
            continue
        vc = {vid[ss[0]]: slot_color[ss[0]] for ss in order}
        ec = {cols[c]: T.mid[c] for c in range(q)}
        yield Candidate(G, TotalColoring(vc, ec), cols)


def decode(T: TopcodeMatrix, wtype: WType = WType.GRACEFUL, connected_only: bool = False,
           limit: Optional[int] = None) -> list[Candidate]:
    return list(itertools.islice(iter_decode(T, wtype, connected_only), limit))


def maximal_merge(T: TopcodeMatrix, wtype: WType = WType.GRACEFUL) -> Candidate:
    return next(iter_decode(T, wtype))


def merge_map(source: Candidate, target: Candidate) -> Optional[dict[int, int]]:
    """Vertex map sending each column's ends in ``source`` to the same
    column's ends in ``target`` (two decodes of one matrix); None when the
    source identifies slots the target keeps apart."""
    m: dict[int, int] = {}
    for (a, b), (x, y) in zip(source.columns, target.columns):
        for s, t in ((a, x), (b, y)):
            if m.setdefault(s, t) != t:
                return None
    return dict(sorted(m.items()))


def distinct_shapes(cands: Sequence[Candidate], limit: Optional[int] = None) -> list[Candidate]:
    """Keep the first candidate of every uncoloured isomorphism class."""
    buckets: dict[tuple, list[Graph]] = {}
    out = []
    for c in cands:
        key = invariant_key(c.graph)
        bucket = buckets.setdefault(key, [])
        if any(is_isomorphic(c.graph, g) for g in bucket):
            continue
        bucket.append(c.graph)
        out.append(c)
        if limit is not None and len(out) >= limit:
            break
    return out


# number strings

def to_string(T: TopcodeMatrix, order: Optional[Sequence[int]] = None) -> str:
    """Concatenate the decimal cells in the given order of column-major cell
    indices (default: column-major, i.e. top, mid, bot per column)."""
    cells = T.cells()
    if order is None:
        order = range(len(cells))
    order = list(order)
    if sorted(order) != list(range(len(cells))):
        raise ValueError(f"order is not a permutation of 0..{len(cells) - 1}")
    return "".join(str(cells[i]) for i in order)


class Solution(NamedTuple):
    tokens: tuple[str, ...]
    matrix: TopcodeMatrix


def _bounds(q: int, wtype: WType) -> tuple[int, int, int]:
    """(max vertex colour, max edge colour, max token width)."""
    vmax = vertex_range(wtype, q)[1]
    emax = max(edge_color_set(wtype, q))
    return vmax, emax, len(str(max(vmax, emax)))


def nsd_solve(s: str, q: int, wtype: WType = WType.GRACEFUL, assume_canonical: bool = True,
              limit: Optional[int] = None) -> list[Solution]:
    """Cut a digit string into 3q tokens forming a valid Topcode-matrix.

    Tokens have no leading zero and stay within the W-type's colour ranges.
    With ``assume_canonical`` tokens fill the cells column-major and the
    columns must appear in increasing edge colour; otherwise every
    segmentation is tried and its tokens are re-arranged into every valid
    matrix (columns sorted, smaller end colour on top). Results come in
    segmentation order.
    """
    if not s.isdigit():
        raise FormatError("number string must consist of decimal digits only")
    if q < 1:
        raise LengthInfeasible("q must be positive")
    vmax, emax, width = _bounds(q, wtype)
    n = 3 * q
    if not n <= len(s) <= n * width:
        raise LengthInfeasible(f"{len(s)} digits cannot hold {n} tokens of width 1..{width}")
    gen = _solve_canonical(s, q, wtype) if assume_canonical else _solve_free(s, q, wtype)
    return list(itertools.islice(gen, limit))


def _tokens_at(s: str, pos: int, width: int, lo: int, hi: int):
    for w in range(1, width + 1):
        tok = s[pos:pos + w]
        if len(tok) < w or tok[0] == "0":
            break
        val = int(tok)
        if lo <= val <= hi:
            yield tok, val


def _solve_canonical(s: str, q: int, wtype: WType) -> Iterator[Solution]:
    vmax, emax, width = _bounds(q, wtype)
    allowed = edge_color_set(wtype, q)
    n = 3 * q
    toks: list[str] = []
    vals: list[int] = []

    def rec(pos: int, cell: int, last_mid: int, max_top: int, min_bot: int):
        left = n - cell
        if not left <= len(s) - pos <= left * width:
            return
        if cell == n:
            yield Solution(tuple(toks), TopcodeMatrix(vals[0::3], vals[1::3], vals[2::3]))
            return
        r = cell % 3
        for tok, val in _tokens_at(s, pos, width, 1, emax if r == 1 else vmax):
            if r == 1:
                if val not in allowed or val <= last_mid:
                    continue
                state = (val, max_top, min_bot)
            elif r == 2:
                if abs(vals[-2] - val) != vals[-1]:
                    continue
                if wtype.set_ordered and not max(max_top, vals[-2]) < min(min_bot, val):
                    continue
                state = (last_mid, max(max_top, vals[-2]), min(min_bot, val))
            else:
                state = (last_mid, max_top, min_bot)
            toks.append(tok)
            vals.append(val)
            yield from rec(pos + len(tok), cell + 1, *state)
            toks.pop()
            vals.pop()

    yield from rec(0, 0, 0, 0, 10 ** 9)


def matrices_from_values(values: Sequence[int], q: int, wtype: WType) -> list[TopcodeMatrix]:
    """Every valid matrix (sorted columns, smaller end on top) whose cells are
    exactly the multiset ``values``."""
    pool = Counter(values)
    mids = sorted(edge_color_set(wtype, q), reverse=True)
    for d in mids:
        if pool[d] <= 0:
            return []
        pool[d] -= 1
    lo, hi = vertex_range(wtype, q)
    out: set[TopcodeMatrix] = set()
    cols: list[tuple[int, int, int]] = []

    def rec(i: int):
        if i == len(mids):
            T = TopcodeMatrix.from_columns(cols).sorted()
            if not wtype.set_ordered or max(T.top) < min(T.bot):
                out.add(T)
            return
        d = mids[i]
        for a in sorted(x for x, c in pool.items() if c > 0):
            b = a + d
            if not (lo <= a and b <= hi) or pool[b] <= 0:
                continue
            pool[a] -= 1
            pool[b] -= 1
            if pool[a] >= 0 and pool[b] >= 0:
                cols.append((a, d, b))
                rec(i + 1)
                cols.pop()
            pool[a] += 1
            pool[b] += 1

    rec(0)
    return sorted(out, key=lambda T: T.rows())


def _solve_free(s: str, q: int, wtype: WType) -> Iterator[Solution]:
    vmax, emax, width = _bounds(q, wtype)
    top = max(vmax, emax)
    n = 3 * q
    toks: list[str] = []

    def rec(pos: int):
        left = n - len(toks)
        if not left <= len(s) - pos <= left * width:
            return
        if left == 0:
            for T in matrices_from_values([int(t) for t in toks], q, wtype):
                yield Solution(tuple(toks), T)
            return
        for tok, _ in _tokens_at(s, pos, width, 1, top):
            toks.append(tok)
            yield from rec(pos + len(tok))
            toks.pop()

    yield from rec(0)


class PipelineResult(NamedTuple):
    matrix: TopcodeMatrix
    candidates: list[Candidate]
    pairs: list[tuple[int, int, ColoredHom]]  # (source index, target index, verified hom)


def nsd_pipeline(s: str, q: int, wtype: WType = WType.GRACEFUL, pairing_limit: Optional[int] = None,
                 assume_canonical: bool = True, decode_limit: Optional[int] = None) -> list[PipelineResult]:
    """Segment, decode, then pair decoded graphs by colour-merging maps.

    Pairs onto earlier candidates come first, so the merges onto the
    maximal-merge graph lead the list. An infeasible length yields no results.
    """
    try:
        sols = nsd_solve(s, q, wtype, assume_canonical)
    except LengthInfeasible:
        return []
    results = []
    seen = set()
    for sol in sols:
        if sol.matrix in seen:
            continue
        seen.add(sol.matrix)
        cands = decode(sol.matrix, wtype, connected_only=True, limit=decode_limit)
        pairs = []
        for t, tgt in enumerate(cands):
            if pairing_limit is not None and len(pairs) >= pairing_limit:
                break
            for i, src in enumerate(cands):
                if i == t:
                    continue
                m = merge_map(src, tgt)
                if m is None:
                    continue
                h = ColoredHom(src.graph, src.coloring, tgt.graph, tgt.coloring, m, wtype)
                if colored_check(h).passed:
                    pairs.append((i, t, h))
                    if pairing_limit is not None and len(pairs) >= pairing_limit:
                        break
        results.append(PipelineResult(sol.matrix, cands, pairs))
    return results
