import io

import pytest
from hypothesis import given

from cig import CoherentGraph
from cig.cli import EXIT_DIVERGENT, EXIT_FAIL, EXIT_INPUT, EXIT_OK, run
from cig.errors import FormatError
from cig.io import format_cig, parse_cig, to_dot

from strategies import coherent_graphs


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_parse_basic_file():
    g = parse_cig("vertex z\nedge e a b  # comment\nedge f b c\ncoh e f\n")
    assert g.vertices == {"a", "b", "c", "z"}
    assert g.coh.coherent("e", "f")
    assert not parse_cig("edge e a b\nedge f b c\n").coh.coherent("e", "f")


def test_directives():
    text = "edge e a b\nedge f c d\nedge g b c\nedge k x y\n"
    assert parse_cig(text + "coherence full\n").coh.is_full()
    chordless = parse_cig(text + "coherence chordless\n")
    # g bridges e and f
    assert chordless.coh.coherent("e", "k") and not chordless.coh.coherent("e", "f")


@pytest.mark.parametrize("text", [
    "edge e a b\nedge f b c\ncoh e f\ncoherence full\n",
    "edge e a b\ncoherence full\ncoherence simple\n",
    "edge e a b\ncoherence weird\n",
    "edge e a b\nedge e b c\n",
    "edge e a b\ncoh e x\n",
    "edge e a\n",
])
def test_malformed_files(text):
    with pytest.raises(FormatError):
        parse_cig(text)


def test_format_error_carries_line():
    with pytest.raises(FormatError) as info:
        parse_cig("vertex a\n\nbogus line\n")
    assert info.value.line == 3


@given(coherent_graphs(vertices="abcd"))
def test_format_roundtrip(g):
    text = format_cig(g)
    back = parse_cig(text)
    assert back.vertices == {str(v) for v in g.vertices}
    assert len(back.edges) == len(g.edges)
    assert len(back.coh.pairs) == len(g.coh.pairs)
    assert format_cig(back) == text


def test_dot_output():
    g = CoherentGraph.build([("e", "a", "b"), ("f", "b", "a"), ("k", "c", "c")], coherence=[("e", "f")])
    dot = to_dot(g, labels={"a": "A"})
    assert dot.startswith("digraph G {") and dot.rstrip().endswith("}")
    assert '"a" [label="A"]' in dot
    assert "dir=none" in dot
    assert dot.count("->") == 2


CHAIN_G = "edge e a m\n"
CHAIN_H = "edge f m b\n"


def test_cli_check_correct_and_incorrect():
    code, out, _ = run_cli("check", "(A|A^)", "--links", "0-1")
    assert code == EXIT_OK and "Correct" in out
    code, out, _ = run_cli("check", "(A*A^)", "--links", "0-1", "--oracle")
    assert code == EXIT_FAIL
    assert "witness (2 edges)" in out and "agrees" in out
    code, out, _ = run_cli("check", "(A|A^)|(B|B^)", "--links", "0-1,2-3", "--oracle", "--no-mix")
    assert code == EXIT_OK and "disagrees" in out


@pytest.mark.parametrize("argv", [
    ("check", "(A|", "--links", "0-1"),
    ("check", "A|A", "--links", "0-1"),
    ("check", "A|A^", "--links", "0-x"),
    ("check", "A|A^"),
    ("nonsense",),
])
def test_cli_input_errors(argv):
    code, _, err = run_cli(*argv)
    assert code == EXIT_INPUT and err


def test_cli_cograph():
    code, out, _ = run_cli("cograph", "(A|B)*(C|D)")
    assert code == EXIT_OK
    assert len(parse_cig(out).edges) == 8
    code, out, _ = run_cli("cograph", "(A|B)*(C|D)", "--dot")
    assert out.count("dir=none") == 4 and 'label="C"' in out


def test_cli_orth(tmp_path):
    g = write(tmp_path, "g.cig", "edge e a b\n")
    h = write(tmp_path, "h.cig", "edge f b a\n")
    empty = write(tmp_path, "empty.cig", "vertex a\nvertex b\n")
    assert run_cli("orth", g, empty)[0] == EXIT_OK
    code, out, _ = run_cli("orth", g, h)
    assert code == EXIT_FAIL and "witness (2 edges)" in out
    assert run_cli("orth", g, h, "--simple")[0] == EXIT_FAIL
    other = write(tmp_path, "other.cig", "edge f b c\n")
    assert run_cli("orth", g, other)[0] == EXIT_INPUT


def test_cli_exec(tmp_path):
    g, h = write(tmp_path, "g.cig", CHAIN_G), write(tmp_path, "h.cig", CHAIN_H)
    code, out, _ = run_cli("exec", g, h)
    assert code == EXIT_OK
    assert "edge [[0,e],[1,f]] a b" in out
    target = tmp_path / "out.cig"
    assert run_cli("exec", g, h, "-o", str(target))[0] == EXIT_OK
    assert target.read_text() == out


def test_cli_exec_divergence(tmp_path):
    g = write(tmp_path, "g.cig", "edge a x m1\nedge g m2 m1\nedge b m2 y\ncoherence full\n")
    h = write(tmp_path, "h.cig", "edge h m1 m2\n")
    code, _, err = run_cli("exec", g, h)
    assert code == EXIT_DIVERGENT and err
    code, out, _ = run_cli("exec", g, h, "--simple")
    assert code == EXIT_OK and " x y" in out


def test_cli_missing_file(tmp_path):
    assert run_cli("exec", str(tmp_path / "nope.cig"), str(tmp_path / "nope.cig"))[0] == EXIT_INPUT


def test_cli_cut(tmp_path):
    m1 = write(tmp_path, "m1.cig", "edge pq p q\nedge qp q p\n")
    m2 = write(tmp_path, "m2.cig", "edge qr q r\nedge rq r q\n")
    code, out, _ = run_cli("cut", m1, m2, "--shared", "q")
    assert code == EXIT_OK
    assert sorted(parse_cig(out).ends.values()) == [("p", "r"), ("r", "p")]
    code, out, _ = run_cli("cut", m1, m1, "--shared", "p,q")
    assert code == EXIT_FAIL and "cycle" in out.lower()


def test_cli_normalize_and_rename(tmp_path):
    g = write(tmp_path, "g.cig", "edge e1 a b\nedge e2 b c\nedge e3 c a\ncoh e1 e2\n")
    code, out, _ = run_cli("normalize", g)
    assert code == EXIT_OK and len(parse_cig(out).edges) == 3
    code, out, _ = run_cli("rename", g, "--map", "a=x")
    assert code == EXIT_OK and parse_cig(out).vertices == {"x", "b", "c"}
    assert run_cli("rename", g, "--map", "a=b")[0] == EXIT_INPUT
    assert run_cli("rename", g, "--map", "q=z")[0] == EXIT_INPUT
    assert run_cli("rename", g, "--map", "a")[0] == EXIT_INPUT


def test_cli_is_deterministic(tmp_path):
    g, h = write(tmp_path, "g.cig", CHAIN_G), write(tmp_path, "h.cig", CHAIN_H)
    for argv in (("exec", g, h), ("cograph", "(A|B)*(C|(D*E))", "--dot"), ("selftest", "--seed", "3", "--cases", "5")):
        assert run_cli(*argv) == run_cli(*argv)


def test_cli_selftest():
    code, out, _ = run_cli("selftest", "--seed", "1", "--cases", "10")
    assert code == EXIT_OK
    assert "FAIL" not in out and "associativity" in out
