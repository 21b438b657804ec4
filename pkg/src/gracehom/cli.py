"""Command-line front end.

Every subcommand ends with one line "RESULT <pass|fail> <detail>". Exit codes:
0 pass, 1 verified failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import io, oracle
from .coloring import WType, from_odd, search, to_odd, verify
from .errors import GraceHomError
from .graph import Graph
from .group import add, generate, verify_every_zero
from .homomorphism import ColoredHom, bad_edges, colored_check, find_homs, is_faithful, is_full
from .lattice import build, lattice_hom
from .sequence import chain, check_stage, collapse_theta, fold_theta, grow, starred
from .topcode import decode, encode, nsd_pipeline, nsd_solve, to_string

PASS, FAIL, BAD_INPUT = 0, 1, 2


def result(ok: bool, detail: str = "") -> int:
    print(f"RESULT {'pass' if ok else 'fail'} {detail}".rstrip())
    return PASS if ok else FAIL


def _mapping_str(m) -> str:
    return " ".join(f"{a}->{b}" for a, b in sorted(m.items()))


def _coloring_str(f) -> str:
    return " ".join(f"{v}:{c}" for v, c in sorted(f.vertex.items()))


def _wtype(text: str) -> WType:
    try:
        return WType.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit_dir(path) -> Path | None:
    if path is None:
        return None
    d = Path(path)
    d.mkdir(parents=True, exist_ok=True)
    return d


# coloring and homomorphism commands

def cmd_verify_coloring(a) -> int:
    G = io.read(a.graph, io.parse_graph)
    f = io.read(a.coloring, io.parse_coloring)
    rep = verify(G, f, a.wtype)
    for line in rep.lines():
        print(line)
    return result(rep.passed, a.wtype.value)


def cmd_find_colorings(a) -> int:
    G = io.read(a.graph, io.parse_graph)
    found = search(G, a.wtype, a.limit)
    out = _emit_dir(a.emit_dir)
    for i, f in enumerate(found, start=1):
        print(f"COLORING {i} {_coloring_str(f)}")
        if out:
            io.write(out / f"coloring_{i}.txt", io.format_coloring(f))
    return result(bool(found), f"count={len(found)}")


def cmd_check_hom(a) -> int:
    G = io.read(a.source, io.parse_graph)
    H = io.read(a.target, io.parse_graph)
    m = io.read(a.mapping, io.parse_mapping)
    bad = bad_edges(G, H, m)
    if bad:
        return result(False, f"edges not preserved: {bad[:10]}")
    return result(True, f"faithful={is_faithful(G, H, m)} full={is_full(G, H, m)}")


def cmd_find_homs(a) -> int:
    G = io.read(a.source, io.parse_graph)
    H = io.read(a.target, io.parse_graph)
    homs = find_homs(G, H, a.limit)
    if not a.count_only:
        for i, m in enumerate(homs, start=1):
            print(f"HOM {i} {_mapping_str(m)}")
    return result(True, f"count={len(homs)}")


def cmd_colored_check(a) -> int:
    G = io.read(a.source, io.parse_graph)
    f = io.read(a.source_coloring, io.parse_coloring)
    H = io.read(a.target, io.parse_graph)
    g = io.read(a.target_coloring, io.parse_coloring)
    m = io.read(a.mapping, io.parse_mapping)
    rep = colored_check(ColoredHom(G, f, H, g, m, a.wtype))
    for line in rep.lines():
        print(line)
    return result(rep.passed, a.wtype.value)


# sequence commands

def _stages(a):
    seed = io.read(a.seed, io.parse_graph) if a.seed else None
    return grow(seed, a.steps)


def cmd_grow_sequence(a) -> int:
    stages = _stages(a)
    out = _emit_dir(a.emit_dir)
    ok = True
    for st in stages:
        problems = check_stage(st)
        ok = ok and not problems
        print(f"STAGE {st.stage} p={st.graph.p} q={st.graph.q} labels={'ok' if not problems else problems[0]}")
        if out:
            io.write(out / f"stage_{st.stage}.txt", io.format_graph(st.graph))
            io.write(out / f"stage_{st.stage}_labels.txt", io.format_labels(st.labels))
    return result(ok, f"stages={len(stages)}")


def cmd_verify_chain(a) -> int:
    stages = _stages(a)
    theta = collapse_theta if a.theta == "collapse" else fold_theta
    ok = True
    for n in range(1, len(stages)):
        src, dst = starred(stages[n]), starred(stages[n - 1])
        bad = bad_edges(src, dst, theta(stages, n))
        ok = ok and not bad
        print(f"STEP {n} {'pass' if not bad else 'fail'} {f'broken edges {bad[:5]}' if bad else ''}".rstrip())
    if a.theta == "fold" and len(stages) > 1:
        total = chain(stages)
        bad = bad_edges(starred(stages[-1]), starred(stages[0]), total)
        ok = ok and not bad
        print(f"COMPOSED {'pass' if not bad else 'fail'}")
    return result(ok, f"theta={a.theta} steps={len(stages) - 1}")


# group commands

def _group(a):
    G = io.read(a.graph, io.parse_graph)
    f = io.read(a.coloring, io.parse_coloring)
    return generate(G, f, a.modulus)


def cmd_group_generate(a) -> int:
    g = _group(a)
    out = _emit_dir(a.emit_dir)
    for i, f in enumerate(g.elements, start=1):
        print(f"ELEMENT {i} {_coloring_str(f)}")
        if out:
            io.write(out / f"element_{i}.txt", io.format_coloring(f))
    return result(True, f"modulus={g.modulus}")


def cmd_group_add(a) -> int:
    g = _group(a)
    return result(True, f"index={add(g, a.i, a.j, a.k)}")


def cmd_group_verify(a) -> int:
    g = _group(a)
    rep = verify_every_zero(g, a.wtype)
    for line in rep.lines():
        print(line)
    return result(rep.passed, f"modulus={g.modulus}")


# lattice commands

def cmd_lattice_build(a) -> int:
    base = [io.read(p, io.parse_graph) for p in a.base]
    e = io.read(a.element, io.parse_element)
    G = build(base, e)
    text = io.format_graph(G)
    if a.out:
        io.write(a.out, text)
    else:
        sys.stdout.write(text)
    return result(True, f"p={G.p} q={G.q}")


def cmd_lattice_hom_check(a) -> int:
    gs = [io.read(p, io.parse_graph) for p in a.base_g]
    hs = [io.read(p, io.parse_graph) for p in a.base_h]
    maps = [io.read(p, io.parse_mapping) for p in a.maps]
    e = io.read(a.element, io.parse_element)
    lh = lattice_hom(gs, hs, maps, e)
    detail = f"source p={lh.source.p} image p={lh.image.p}"
    if lh.collapsed:
        detail += " image identification collapses an edge"
    return result(lh.verdict, detail)


# topcode commands

def cmd_topcode_encode(a) -> int:
    G = io.read(a.graph, io.parse_graph)
    f = io.read(a.coloring, io.parse_coloring)
    T = encode(G, f, a.wtype)
    sys.stdout.write(io.format_matrix(T))
    return result(True, f"q={T.q}")


def cmd_topcode_decode(a) -> int:
    T = io.read(a.matrix, io.parse_matrix)
    cands = decode(T, a.wtype, a.connected, a.limit)
    out = _emit_dir(a.emit_dir)
    for i, c in enumerate(cands, start=1):
        print(f"CANDIDATE {i} p={c.graph.p} edges={' '.join(f'{u}-{v}' for u, v in c.graph.edges)}")
        if out:
            io.write(out / f"candidate_{i}.txt", io.format_graph(c.graph))
            io.write(out / f"candidate_{i}_coloring.txt", io.format_coloring(c.coloring))
    return result(bool(cands), f"count={len(cands)}")


def cmd_topcode_stringify(a) -> int:
    T = io.read(a.matrix, io.parse_matrix)
    s = to_string(T)
    print(s)
    return result(True, f"digits={len(s)}")


def cmd_topcode_nsd_solve(a) -> int:
    sols = nsd_solve(a.string, a.q, a.wtype, a.canonical, a.limit)
    for i, sol in enumerate(sols, start=1):
        print(f"SOLUTION {i} " + " | ".join(" ".join(map(str, r)) for r in sol.matrix.rows()))
    if not sols:
        return result(False, f"NoSolution digits={len(a.string)} q={a.q}")
    return result(True, f"count={len(sols)}")


def cmd_topcode_pipeline(a) -> int:
    res = nsd_pipeline(a.string, a.q, a.wtype, a.pairing_limit, a.canonical, a.decode_limit)
    for i, r in enumerate(res, start=1):
        print(f"MATRIX {i} " + " | ".join(" ".join(map(str, row)) for row in r.matrix.rows()))
        print(f"DECODED {i} connected={len(r.candidates)} homs={len(r.pairs)}")
        for s, t, h in r.pairs:
            print(f"PAIR {i} {s + 1}->{t + 1} {_mapping_str(h.mapping)}")
    if not res:
        return result(False, f"NoSolution digits={len(a.string)} q={a.q}")
    return result(True, f"matrices={len(res)}")


# oracle commands

def cmd_oracle_homs(a) -> int:
    G = io.read(a.source, io.parse_graph)
    H = io.read(a.target, io.parse_graph)
    homs = oracle.all_homs(G, H)
    return result(True, f"count={len(homs)}")


def cmd_oracle_colorings(a) -> int:
    G = io.read(a.graph, io.parse_graph)
    if a.wtype is WType.BIPARTITE:
        raise GraceHomError("the colouring oracle covers the graceful family only")
    found = oracle.all_graceful_vertex_colorings(G, a.wtype.odd, a.wtype.set_ordered)
    for i, cols in enumerate(found, start=1):
        print(f"COLORING {i} " + " ".join(f"{v}:{c}" for v, c in enumerate(cols, start=1)))
    return result(True, f"count={len(found)}")


def _random_graph(rng: random.Random, p: int) -> Graph:
    pairs = [(u, v) for u in range(1, p + 1) for v in range(u + 1, p + 1)]
    return Graph(p, [e for e in pairs if rng.random() < 0.5])


def cmd_oracle_compare_homs(a) -> int:
    rng = random.Random(a.seed)
    mismatches = 0
    for t in range(1, a.trials + 1):
        G = _random_graph(rng, rng.randint(1, a.max_p))
        H = _random_graph(rng, rng.randint(1, a.max_p))
        fast, slow = len(find_homs(G, H)), len(oracle.all_homs(G, H))
        if fast != slow:
            mismatches += 1
            print(f"MISMATCH {t} search={fast} oracle={slow} G={G.edges} H={H.edges}")
    return result(mismatches == 0, f"trials={a.trials} mismatches={mismatches}")


def cmd_oracle_compare_colorings(a) -> int:
    rng = random.Random(a.seed)
    mismatches = 0
    for t in range(1, a.trials + 1):
        G = _random_graph(rng, rng.randint(2, a.max_p))
        if G.q == 0:
            continue
        fast = sorted(f.vertex_vector(G) for f in search(G, a.wtype))
        slow = oracle.all_graceful_vertex_colorings(G, a.wtype.odd, a.wtype.set_ordered)
        if fast != slow:
            mismatches += 1
            print(f"MISMATCH {t} search={len(fast)} oracle={len(slow)} G={G.edges}")
    return result(mismatches == 0, f"trials={a.trials} mismatches={mismatches}")


def cmd_transform(a) -> int:
    G = io.read(a.graph, io.parse_graph)
    f = io.read(a.coloring, io.parse_coloring)
    g = to_odd(G, f) if a.direction == "to-odd" else from_odd(G, f)
    sys.stdout.write(io.format_coloring(g))
    return result(True, a.direction)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gracehom", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    wt = dict(type=_wtype, default=WType.GRACEFUL,
              help="bipartite, graceful, set-ordered-graceful, odd-graceful, set-ordered-odd-graceful")

    p = sub.add_parser("verify-coloring", help="check a total colouring against a W-type")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--wtype", **wt)
    p.set_defaults(func=cmd_verify_coloring)

    p = sub.add_parser("find-colorings", help="enumerate colourings of a W-type")
    p.add_argument("graph")
    p.add_argument("--wtype", **wt)
    p.add_argument("--limit", type=int)
    p.add_argument("--emit-dir")
    p.set_defaults(func=cmd_find_colorings)

    p = sub.add_parser("transform", help="convert between graceful and odd-graceful set-ordered colourings")
    p.add_argument("direction", choices=["to-odd", "from-odd"])
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("check-hom", help="check a vertex map is a homomorphism")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("mapping")
    p.set_defaults(func=cmd_check_hom)

    p = sub.add_parser("find-homs", help="enumerate homomorphisms")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--limit", type=int)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_find_homs)

    p = sub.add_parser("colored-check", help="verify a totally-coloured homomorphism")
    p.add_argument("source")
    p.add_argument("source_coloring")
    p.add_argument("target")
    p.add_argument("target_coloring")
    p.add_argument("mapping")
    p.add_argument("--wtype", **wt)
    p.set_defaults(func=cmd_colored_check)

    for name, func, helptext in (("grow-sequence", cmd_grow_sequence, "build the labelled graph sequence"),
                                 ("verify-chain", cmd_verify_chain, "check the homomorphism chain")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--seed", help="seed graph file (default: triangle)")
        p.add_argument("--steps", type=int, default=3)
        if name == "grow-sequence":
            p.add_argument("--emit-dir")
        else:
            p.add_argument("--theta", choices=["fold", "collapse"], default="fold")
        p.set_defaults(func=func)

    grp = sub.add_parser("group", help="every-zero graphic groups").add_subparsers(dest="action", required=True)
    for name, func in (("generate", cmd_group_generate), ("add", cmd_group_add), ("verify", cmd_group_verify)):
        p = grp.add_parser(name)
        p.add_argument("graph")
        p.add_argument("coloring")
        p.add_argument("--modulus", type=int, required=True)
        if name == "generate":
            p.add_argument("--emit-dir")
        elif name == "add":
            for x in ("i", "j", "k"):
                p.add_argument(x, type=int)
        else:
            p.add_argument("--wtype", type=_wtype)
        p.set_defaults(func=func)

    lat = sub.add_parser("lattice", help="graphic lattice elements").add_subparsers(dest="action", required=True)
    p = lat.add_parser("build")
    p.add_argument("--base", nargs="+", required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lattice_build)
    p = lat.add_parser("hom-check")
    p.add_argument("--base-g", nargs="+", required=True)
    p.add_argument("--base-h", nargs="+", required=True)
    p.add_argument("--maps", nargs="+", required=True)
    p.add_argument("--element", required=True)
    p.set_defaults(func=cmd_lattice_hom_check)

    top = sub.add_parser("topcode", help="Topcode-matrices and number strings").add_subparsers(dest="action", required=True)
    p = top.add_parser("encode")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--wtype", type=_wtype)
    p.set_defaults(func=cmd_topcode_encode)
    p = top.add_parser("decode")
    p.add_argument("matrix")
    p.add_argument("--wtype", **wt)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--limit", type=int)
    p.add_argument("--emit-dir")
    p.set_defaults(func=cmd_topcode_decode)
    p = top.add_parser("stringify")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_topcode_stringify)
    for name, func in (("nsd-solve", cmd_topcode_nsd_solve), ("pipeline", cmd_topcode_pipeline)):
        p = top.add_parser(name)
        p.add_argument("string")
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--wtype", **wt)
        order = p.add_mutually_exclusive_group()
        order.add_argument("--canonical", dest="canonical", action="store_true", default=True,
                           help="cells are column-major with increasing edge colour (default)")
        order.add_argument("--free", dest="canonical", action="store_false",
                           help="try every segmentation and arrangement")
        if name == "nsd-solve":
            p.add_argument("--limit", type=int)
        else:
            p.add_argument("--pairing-limit", type=int, default=20)
            p.add_argument("--decode-limit", type=int, default=200)
        p.set_defaults(func=func)

    orc = sub.add_parser("oracle", help="exhaustive brute force").add_subparsers(dest="action", required=True)
    p = orc.add_parser("homs")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(func=cmd_oracle_homs)
    p = orc.add_parser("colorings")
    p.add_argument("graph")
    p.add_argument("--wtype", **wt)
    p.set_defaults(func=cmd_oracle_colorings)
    p = orc.add_parser("compare-homs", help="random pairs: search vs brute force")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--max-p", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle_compare_homs)
    p = orc.add_parser("compare-colorings", help="random graphs: search vs brute force")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--max-p", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--wtype", **wt)
    p.set_defaults(func=cmd_oracle_compare_colorings)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraceHomError as exc:
        print(f"ERROR {type(exc).__name__}: {exc}")
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
