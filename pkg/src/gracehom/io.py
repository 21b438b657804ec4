"""Line-oriented text formats. '#' starts a comment line everywhere.

graph     first line "p q", then q lines "u v"
coloring  lines "v <id> <color>" and "e <u> <v> <color>"
mapping   lines "<source vertex> <target vertex>"
matrix    three lines of q integers (top, middle, bottom rows)
labels    lines "<vertex> <label>"
element   "base <k>" then one line per further step:
          "op <ominus|odot> <k> <u>:<v> [<u>:<v> ...]"
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Mapping

from .coloring import TotalColoring
from .errors import FormatError, GraceHomError
from .graph import Graph
from .lattice import OPS, LatticeElement, Step
from .topcode import TopcodeMatrix


def _lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(line.split())
    return out


def _ints(parts: Iterable[str], what: str) -> list[int]:
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise FormatError(f"non-integer in {what}: {' '.join(parts)}") from None


def parse_graph(text: str) -> Graph:
    rows = _lines(text)
    if not rows or len(rows[0]) != 2:
        raise FormatError("graph file must start with 'p q'")
    p, q = _ints(rows[0], "header")
    body = rows[1:]
    if len(body) != q:
        raise FormatError(f"header promises {q} edges, found {len(body)}")
    pairs = []
    for r in body:
        if len(r) != 2:
            raise FormatError(f"edge line needs two vertices: {' '.join(r)}")
        pairs.append(tuple(_ints(r, "edge")))
    try:
        G = Graph(p, pairs)
    except GraceHomError as exc:
        raise FormatError(str(exc)) from None
    if G.q != q:
        raise FormatError(f"edge list has duplicates ({q} lines, {G.q} distinct edges)")
    return G


def format_graph(G: Graph) -> str:
    return "".join([f"{G.p} {G.q}\n"] + [f"{u} {v}\n" for u, v in G.edges])


def parse_coloring(text: str) -> TotalColoring:
    vc, ec = {}, {}
    for r in _lines(text):
        if r[0] == "v" and len(r) == 3:
            v, c = _ints(r[1:], "vertex colour")
            vc[v] = c
        elif r[0] == "e" and len(r) == 4:
            u, v, c = _ints(r[1:], "edge colour")
            ec[(u, v)] = c
        else:
            raise FormatError(f"bad colouring line: {' '.join(r)}")
    try:
        return TotalColoring(vc, ec)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_coloring(f: TotalColoring) -> str:
    lines = [f"v {v} {c}\n" for v, c in sorted(f.vertex.items())]
    lines += [f"e {u} {v} {c}\n" for (u, v), c in sorted(f.edge.items())]
    return "".join(lines)


def parse_mapping(text: str) -> dict[int, int]:
    m = {}
    for r in _lines(text):
        if len(r) != 2:
            raise FormatError(f"mapping line needs two vertices: {' '.join(r)}")
        a, b = _ints(r, "mapping")
        if a in m:
            raise FormatError(f"vertex {a} mapped twice")
        m[a] = b
    return m


def format_mapping(m: Mapping[int, int]) -> str:
    return "".join(f"{a} {b}\n" for a, b in sorted(m.items()))


def parse_matrix(text: str) -> TopcodeMatrix:
    rows = _lines(text)
    if len(rows) != 3:
        raise FormatError(f"matrix file needs three rows, found {len(rows)}")
    top, mid, bot = (_ints(r, "matrix") for r in rows)
    try:
        return TopcodeMatrix(top, mid, bot)
    except GraceHomError as exc:
        raise FormatError(str(exc)) from None


def format_matrix(T: TopcodeMatrix) -> str:
    return "".join(" ".join(str(x) for x in row) + "\n" for row in T.rows())


def parse_labels(text: str) -> dict[int, int]:
    return parse_mapping(text)


format_labels = format_mapping


def parse_element(text: str) -> LatticeElement:
    rows = _lines(text)
    if not rows:
        return LatticeElement(())
    if rows[0][0] != "base" or len(rows[0]) != 2:
        raise FormatError("element file must start with 'base <k>'")
    steps = [Step(_ints(rows[0][1:], "base")[0])]
    for r in rows[1:]:
        if r[0] != "op" or len(r) < 4 or r[1] not in OPS:
            raise FormatError(f"bad step line: {' '.join(r)}")
        k = _ints([r[2]], "base index")[0]
        pairs = []
        for tok in r[3:]:
            a, sep, b = tok.partition(":")
            if not sep:
                raise FormatError(f"pair must look like u:v, got {tok}")
            pairs.append(tuple(_ints([a, b], "pair")))
        steps.append(Step(k, r[1], tuple(pairs)))
    return LatticeElement(tuple(steps))


def format_element(e: LatticeElement) -> str:
    lines = []
    for i, s in enumerate(e.steps):
        if i == 0:
            lines.append(f"base {s.base}\n")
        else:
            pairs = " ".join(f"{a}:{b}" for a, b in s.spec)
            lines.append(f"op {s.op} {s.base} {pairs}\n")
    return "".join(lines)


def read(path, parser):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    return parser(text)


def write(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
