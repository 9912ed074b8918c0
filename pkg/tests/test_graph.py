import pytest
from hypothesis import given, strategies as st

from cig import DelocationError, DirectedMultigraph, graphs_equiv, plug, plug3, rename_vertices
from cig.graph import sort_tokens, token_key

from strategies import multigraphs


def graph(*edges, vertices=()):
    return DirectedMultigraph.from_edges(edges, vertices)


def test_token_order_is_total_and_mixed():
    tokens = [("x", 1), "b", 3, "a", (0, "z"), 1]
    assert sort_tokens(tokens) == [1, 3, "a", "b", (0, "z"), ("x", 1)]
    assert token_key(True) == token_key(1)


def test_endpoints_must_be_vertices():
    with pytest.raises(ValueError):
        DirectedMultigraph(frozenset({"a"}), {"e": ("a", "b")})


def test_plug_two_one_edge_graphs():
    p = plug(graph(("e", "a", "b")), graph(("f", "b", "a")))
    assert p.graph.vertices == {"a", "b"}
    assert dict(p.graph.ends) == {(0, "e"): ("a", "b"), (1, "f"): ("b", "a")}
    assert p.provenance == {(0, "e"): 0, (1, "f"): 1}


def test_plug_with_empty_graph_keeps_edges_on_the_left():
    g = graph(("e", "a", "b"), ("f", "b", "b"))
    p = plug(g, DirectedMultigraph.empty(g.vertices))
    assert {e[0] for e in p.graph.edges} == {0}
    assert sorted(e[1] for e in p.graph.edges) == ["e", "f"]


def test_plug_disjoint():
    p = plug(graph(("e", "a", "b")), graph(("e", "c", "d")))
    assert len(p.graph.vertices) == 4 and len(p.graph.edges) == 2
    assert p.boundary() == {"a", "b", "c", "d"}


def test_plug3_tags_and_restriction():
    f, g, h = graph(("x", "a", "b")), graph(("y", "b", "c")), graph(("z", "c", "a"))
    p = plug3(f, g, h)
    assert len(p.graph.edges) == 3 and {e[0] for e in p.graph.edges} == {0, 1, 2}
    assert p.restrict([1, 2]) == plug(g, h)
    assert p.restrict([0, 1]) == plug(f, g)
    empty = plug3(*(DirectedMultigraph.empty(["a"]) for _ in range(3)))
    assert not empty.graph.edges


def test_rename():
    g = graph(("e", "a", "b"))
    assert rename_vertices(g, {"a": "a", "b": "b"}) == g
    assert dict(rename_vertices(g, {"a": "x", "b": "y"}).ends) == {"e": ("x", "y")}
    with pytest.raises(DelocationError):
        rename_vertices(g, {"a": "x", "b": "x"})
    with pytest.raises(DelocationError):
        rename_vertices(g, {"a": "x"})


def test_graphs_equiv_examples():
    g = graph(("e", "a", "b"), ("f", "b", "c"))
    assert graphs_equiv(g, graph(("1", "a", "b"), ("2", "b", "c")))
    assert not graphs_equiv(graph(("e", "a", "b")), graph(("e", "b", "a")))
    assert not graphs_equiv(graph(("e", "a", "b"), ("f", "a", "b")), graph(("e", "a", "b")))
    assert not graphs_equiv(graph(vertices="ab"), graph(vertices="abc"))


@given(multigraphs(), multigraphs(), multigraphs())
def test_graphs_equiv_is_an_equivalence(g, h, k):
    assert graphs_equiv(g, g)
    assert graphs_equiv(g, h) == graphs_equiv(h, g)
    if graphs_equiv(g, h) and graphs_equiv(h, k):
        assert graphs_equiv(g, k)


@given(multigraphs(), st.randoms(use_true_random=False))
def test_rename_roundtrip(g, rnd):
    names = [f"n{i}" for i in range(len(g.vertices))]
    rnd.shuffle(names)
    phi = dict(zip(sort_tokens(g.vertices), names))
    back = {v: k for k, v in phi.items()}
    renamed = rename_vertices(g, phi)
    assert len(renamed) == len(g)
    assert graphs_equiv(rename_vertices(renamed, back), g)


@given(multigraphs(prefix="g"), multigraphs(prefix="h"))
def test_plug_is_symmetric_up_to_tags(g, h):
    a, b = plug(g, h), plug(h, g)
    assert a.graph.vertices == b.graph.vertices
    swapped = {(1 - t, e): st for (t, e), st in b.graph.ends.items()}
    assert swapped == dict(a.graph.ends)
