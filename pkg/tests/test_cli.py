from __future__ import annotations

import random
import subprocess
import sys

import pytest

from conftest import random_graph
from gracehom import io
from gracehom.cli import main
from gracehom.graph import complete, cycle
from gracehom.homomorphism import find_homs
from gracehom.samples import REFERENCE_TOPCODE


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def last(out: str) -> str:
    return out.strip().splitlines()[-1]


@pytest.fixture
def files(tmp_path):
    def put(name, text):
        path = tmp_path / name
        path.write_text(text)
        return path
    return put


def test_check_hom_pass_fail_and_bad_input(capsys, files):
    c4 = files("c4.txt", io.format_graph(cycle(4)))
    k2 = files("k2.txt", io.format_graph(complete(2)))
    good = files("m.txt", "1 1\n2 2\n3 1\n4 2\n")
    bad = files("b.txt", "1 1\n2 1\n3 1\n4 2\n")
    code, out = run(capsys, "check-hom", c4, k2, good)
    assert code == 0 and last(out).startswith("RESULT pass")
    code, out = run(capsys, "check-hom", c4, k2, bad)
    assert code == 1 and last(out).startswith("RESULT fail")
    broken = files("broken.txt", "4 3\n1 2\n")
    code, out = run(capsys, "check-hom", broken, k2, good)
    assert code == 2 and out.startswith("ERROR FormatError")


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["find-homs", "a", "b", "--frobnicate"])
    assert exc.value.code == 2


def test_topcode_encode_prints_rows(capsys, files, reference, tmp_path):
    g = files("g.txt", io.format_graph(reference.graph))
    f = files("f.txt", io.format_coloring(reference.coloring))
    code, out = run(capsys, "topcode", "encode", g, f, "--wtype", "set-ordered-graceful")
    assert code == 0
    assert out.splitlines()[:3] == [" ".join(map(str, r)) for r in REFERENCE_TOPCODE.rows()]


def test_topcode_decode_and_stringify(capsys, files, tmp_path):
    t = files("t.txt", io.format_matrix(REFERENCE_TOPCODE))
    code, out = run(capsys, "topcode", "decode", t, "--wtype", "set-ordered-graceful", "--connected",
                    "--limit", "3", "--emit-dir", tmp_path / "out")
    assert code == 0 and last(out) == "RESULT pass count=3"
    assert (tmp_path / "out" / "candidate_1.txt").exists()
    code, out = run(capsys, "topcode", "stringify", t)
    assert out.splitlines()[0] == "61752763964106511167178189191011011"


def test_nsd_solve_and_pipeline(capsys):
    code, out = run(capsys, "topcode", "nsd-solve", "112", "--q", "1", "--canonical")
    assert code == 0 and "SOLUTION 1 1 | 1 | 2" in out
    code, out = run(capsys, "topcode", "nsd-solve", "617725639104665117611678711891089111011", "--q", "10")
    assert code == 1 and "NoSolution" in last(out)
    code, out = run(capsys, "topcode", "nsd-solve", "12x", "--q", "1")
    assert code == 2
    code, out = run(capsys, "topcode", "pipeline", "112", "--q", "1")
    assert code == 0 and "DECODED 1 connected=1 homs=0" in out


def test_oracle_agrees_with_search(capsys, files):
    rng = random.Random(20)
    for t in range(20):
        G, H = random_graph(rng, rng.randint(1, 5)), random_graph(rng, rng.randint(1, 5))
        g = files(f"g{t}.txt", io.format_graph(G))
        h = files(f"h{t}.txt", io.format_graph(H))
        _, a = run(capsys, "oracle", "homs", g, h)
        _, b = run(capsys, "find-homs", g, h, "--count-only")
        assert last(a) == last(b) == f"RESULT pass count={len(find_homs(G, H))}"


def test_compare_commands(capsys):
    code, out = run(capsys, "oracle", "compare-homs", "--trials", "15", "--seed", "3")
    assert code == 0 and last(out) == "RESULT pass trials=15 mismatches=0"
    code, out = run(capsys, "oracle", "compare-colorings", "--trials", "8", "--seed", "3")
    assert code == 0


def test_sequence_commands(capsys, tmp_path):
    code, out = run(capsys, "grow-sequence", "--steps", "2", "--emit-dir", tmp_path)
    assert code == 0 and "STAGE 2 p=12 q=21 labels=ok" in out
    assert io.read(tmp_path / "stage_2.txt", io.parse_graph).p == 12
    code, out = run(capsys, "verify-chain", "--steps", "4")
    assert code == 0 and "COMPOSED pass" in out
    code, out = run(capsys, "verify-chain", "--steps", "1", "--theta", "collapse")
    assert code == 1


def test_coloring_and_group_commands(capsys, files, reference):
    g = files("g.txt", io.format_graph(reference.graph))
    f = files("f.txt", io.format_coloring(reference.coloring))
    code, out = run(capsys, "verify-coloring", g, f, "--wtype", "set-ordered-graceful")
    assert code == 0 and "CHECK C-8 pass" in out
    code, out = run(capsys, "group", "add", g, f, "--modulus", "7", "2", "3", "1")
    assert last(out) == "RESULT pass index=4"
    code, out = run(capsys, "group", "verify", g, f, "--modulus", "6")
    assert code == 0
    code, out = run(capsys, "group", "generate", g, f, "--modulus", "3")
    assert out.count("ELEMENT") == 3
    p2 = files("p2.txt", "2 1\n1 2\n")
    code, out = run(capsys, "find-colorings", p2)
    assert last(out) == "RESULT pass count=2"
    code, out = run(capsys, "oracle", "colorings", p2)
    assert last(out) == "RESULT pass count=2"
    code, out = run(capsys, "transform", "to-odd", g, f)
    assert code == 0


def test_colored_check_command(capsys, files, reference):
    g = files("g.txt", io.format_graph(reference.graph))
    f = files("f.txt", io.format_coloring(reference.coloring))
    m = files("m.txt", io.format_mapping({v: v for v in reference.graph.vertices}))
    code, out = run(capsys, "colored-check", g, f, g, f, m, "--wtype", "set-ordered-graceful")
    assert code == 0


def test_lattice_commands(capsys, files):
    p3 = files("p3.txt", "3 2\n1 2\n2 3\n")
    p2 = files("p2.txt", "2 1\n1 2\n")
    e = files("e.txt", "base 1\nop ominus 1 3:1\n")
    fold = files("fold.txt", "1 1\n2 2\n3 1\n")
    code, out = run(capsys, "lattice", "build", "--base", p3, "--element", e)
    assert out.splitlines()[0] == "6 5"
    code, out = run(capsys, "lattice", "hom-check", "--base-g", p3, "--base-h", p2, "--maps", fold, "--element", e)
    assert code == 0
    glue = files("glue.txt", "base 1\nop odot 1 1:3 3:2\n")
    code, out = run(capsys, "lattice", "hom-check", "--base-g", p3, "--base-h", p2, "--maps", fold, "--element", glue)
    assert code == 1 and "collapses" in out


def test_deterministic_output(capsys, files):
    t = files("t.txt", io.format_matrix(REFERENCE_TOPCODE))
    outs = {run(capsys, "topcode", "decode", t, "--limit", "20")[1] for _ in range(3)}
    assert len(outs) == 1


def test_console_module_entry(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "gracehom.cli", "grow-sequence", "--steps", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "RESULT pass" in proc.stdout
