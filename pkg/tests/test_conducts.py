import pytest
from hypothesis import given, strategies as st

from cig import (
    CoherentGraph,
    DirectedMultigraph,
    InterfaceError,
    LocationError,
    NotOrthogonalError,
    boxplus,
    canonical_form,
    chordless_coherence,
    conduct_par_test,
    conduct_tensor_test,
    equiv_R,
    execute,
    graphs_equiv,
    is_principal_generator,
    linear_apply,
    maximal_cliques,
    member_of,
    orthogonal,
    par_graph,
    rename_vertices,
    tensor_graph,
)
from cig.conducts import atom_test, boxplus_all
from cig.mll.proofnet import Matching

from strategies import coherent_graphs


def cg(*edges, vertices=(), coherence="full"):
    return CoherentGraph.build(edges, vertices, coherence)


def test_tensor_graph():
    t = tensor_graph(CoherentGraph.empty(["u"]), CoherentGraph.empty(["v"]))
    assert t.vertices == {"u", "v"} and not t.edges
    t = tensor_graph(cg(("e", "a", "b")), cg(("f", "c", "d")))
    assert t.coh.coherent((0, "e"), (1, "f"))
    with pytest.raises(LocationError):
        tensor_graph(cg(("e", "a", "b")), cg(("f", "b", "c")))


@given(coherent_graphs(vertices="ab", prefix="g"), coherent_graphs(vertices="cd", prefix="h"))
def test_tensor_is_disjoint_execution(g, h):
    t, ex = tensor_graph(g, h), execute(g, h)
    assert graphs_equiv(t, ex)
    assert len(t.coh.pairs) == len(ex.coh.pairs)


def test_par_of_atoms():
    p = par_graph(CoherentGraph.empty(["u"]), CoherentGraph.empty(["v"]))
    assert sorted(p.ends.values()) == [("u", "v"), ("v", "u")]
    assert not p.coh.pairs
    assert p.coh == chordless_coherence(p.graph)
    with pytest.raises(LocationError):
        par_graph(CoherentGraph.empty(["u"]), CoherentGraph.empty(["u"]))


@given(coherent_graphs(vertices="ab", prefix="g"), coherent_graphs(vertices="cde", prefix="h"))
def test_par_edge_count(g, h):
    p = par_graph(g, h)
    assert len(p.edges) == len(g.edges) + len(h.edges) + 2 * 2 * 3
    fresh = [e for e in p.edges if e[0] == 2]
    assert all(not p.coh.strictly_coherent(e, f) for e in fresh for f in p.edges)


def test_conduct_tests_from_atoms():
    a, b = atom_test("u"), atom_test("v")
    t = conduct_tensor_test(a, b)
    assert len(t.vertices) == 2 and len(t.test.edges) == 2
    link = Matching.of([("u", "v")]).as_graph()
    assert not member_of(link, t)
    assert member_of(link, conduct_par_test(a, b))
    assert not conduct_par_test(a, b).test.edges
    assert member_of(CoherentGraph.empty(["u", "v"]), t)
    with pytest.raises(InterfaceError):
        member_of(CoherentGraph.empty(["u"]), t)


def test_linear_apply_identity():
    # identity map between a and its copy a'
    ident = Matching.of([("a", "a'"), ("b", "b'"), ("c", "c'"), ("d", "d'")]).as_graph()
    arg = Matching.of([("a", "c"), ("b", "d")]).as_graph()
    out = linear_apply(ident, arg, {"a", "b", "c", "d"})
    copy = {v: v + "'" for v in "abcd"}
    assert graphs_equiv(out, rename_vertices(arg.graph, copy))


def test_linear_apply_side_condition():
    f = cg(("x", "a", "b"), ("y", "b", "c"))
    g = cg(("z", "b", "a"), vertices="ab")
    with pytest.raises(NotOrthogonalError) as info:
        linear_apply(f, g, {"a", "b"})
    assert len(info.value.witness) == 2


def test_linear_apply_on_empty_argument():
    f = cg(("x", "c", "d"), ("y", "d", "c"), vertices="abcd", coherence=())
    out = linear_apply(f, CoherentGraph.empty("ab"), {"a", "b"})
    assert graphs_equiv(out, DirectedMultigraph(frozenset("cd"), f.ends))


def test_boxplus_and_decomposition():
    s = boxplus(cg(("e", "a", "b")), cg(("f", "a", "b")))
    assert s.coh.strictly_incoherent((0, "e"), (1, "f"))
    with pytest.raises(InterfaceError):
        boxplus(CoherentGraph.empty("a"), CoherentGraph.empty("b"))


def test_coloured_graph_is_sum_of_colour_classes():
    # two colour classes, coherent inside, incoherent across
    edges = [("r1", "a", "b"), ("r2", "c", "d"), ("b1", "b", "c"), ("b2", "d", "a")]
    pairs = [("r1", "r2"), ("b1", "b2")]
    g = cg(*edges, coherence=pairs)
    red = cg(*edges[:2], vertices="abcd")
    blue = cg(*edges[2:], vertices="abcd")
    assert equiv_R(g, boxplus(red, blue))
    assert len(maximal_cliques(g.coh)) == 2


def test_canonical_form_examples():
    g = cg(("e1", "a", "b"), ("e2", "b", "c"))
    assert equiv_R(canonical_form(g), g) and len(canonical_form(g).edges) == 2
    h = cg(("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "a"), coherence=[("e1", "e2")])
    c = canonical_form(h)
    assert len(c.edges) == 3
    blocks = sorted(sorted(e[1] for e in cl) for cl in maximal_cliques(c.coh))
    assert blocks == [["e1", "e2"], ["e3"]]


def test_equiv_R_examples():
    g = cg(("e1", "a", "b"), ("e2", "b", "c"))
    assert equiv_R(g, canonical_form(g))
    assert not equiv_R(g, cg(("e1", "a", "b"), ("e2", "b", "c"), ("e3", "a", "b")))
    # shared edge e2 in both cliques versus two separate copies
    shared = cg(("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "a"), coherence=[("e1", "e2"), ("e2", "e3")])
    separate = boxplus(cg(("x", "a", "b"), ("y", "b", "c")), cg(("z", "b", "c"), ("w", "c", "a")))
    assert equiv_R(shared, separate)


def test_principal():
    assert not is_principal_generator(cg(("e", "a", "b"), ("f", "a", "b")))
    assert is_principal_generator(CoherentGraph.empty("ab"))
    assert is_principal_generator(par_graph(CoherentGraph.empty("a"), CoherentGraph.empty("b")))


@given(st.lists(coherent_graphs(vertices="abc", max_edges=4), min_size=1, max_size=3), coherent_graphs(vertices="abc"))
def test_orthogonality_distributes_over_sums(parts, f):
    total = boxplus_all(parts)
    assert orthogonal(f, total) == all(orthogonal(f, p) for p in parts)
    assert orthogonal(f, canonical_form(total)) == orthogonal(f, total)


@given(coherent_graphs(vertices="abc", prefix="x"), coherent_graphs(vertices="abc", prefix="y"))
def test_sum_commutes_and_canonical_form_is_idempotent(g, h):
    assert equiv_R(boxplus(g, h), boxplus(h, g))
    c = canonical_form(g)
    assert equiv_R(canonical_form(c), c)
    assert equiv_R(g, c)
