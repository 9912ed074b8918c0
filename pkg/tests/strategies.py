"""Hypothesis strategies for graphs, coherences and formulas."""
from hypothesis import strategies as st

from cig import CoherenceRelation, CoherentGraph, DirectedMultigraph
from cig.mll.formula import Atom, Par, Tensor

VERTICES = ["a", "b", "c", "d", "e"]


@st.composite
def multigraphs(draw, vertices=None, max_edges=6, loops=True, prefix="e"):
    if vertices is None:
        vertices = draw(st.lists(st.sampled_from(VERTICES), min_size=1, max_size=5, unique=True))
    vertices = sorted(vertices)
    ends = draw(st.lists(st.tuples(st.sampled_from(vertices), st.sampled_from(vertices)), max_size=max_edges))
    if not loops:
        ends = [(s, t) for s, t in ends if s != t]
    return DirectedMultigraph.from_edges([(f"{prefix}{k}", s, t) for k, (s, t) in enumerate(ends)], vertices)


@st.composite
def relations(draw, web):
    web = sorted(web)
    pairs = [frozenset((a, b)) for i, a in enumerate(web) for b in web[i + 1:]]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return CoherenceRelation(frozenset(web), frozenset(p for p, keep in zip(pairs, chosen) if keep))


@st.composite
def coherent_graphs(draw, vertices=None, max_edges=6, loops=True, prefix="e"):
    g = draw(multigraphs(vertices, max_edges, loops, prefix))
    return CoherentGraph(g, draw(relations(g.edges)))


def formulas(max_leaves=7):
    atoms = st.builds(Atom, st.sampled_from("ABCD"), st.booleans())
    return st.recursive(
        atoms,
        lambda sub: st.builds(Tensor, sub, sub) | st.builds(Par, sub, sub),
        max_leaves=max_leaves,
    )
