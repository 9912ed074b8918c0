"""Conducts represented by a single generator (test) and the operations on them."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .coherence import CoherenceRelation, CoherentGraph, coh_plus, coh_with, maximal_cliques
from .errors import InterfaceError, LocationError, NotOrthogonalError
from .execution import ExecutedGraph, cycle_witness, execute, orthogonal
from .graph import DirectedMultigraph, sort_tokens


@dataclass(frozen=True)
class Generator:
    """The conduct ``{test}^⊥``; the conduct itself is never materialised."""

    test: CoherentGraph

    @property
    def vertices(self) -> frozenset:
        return self.test.vertices


def _disjoint(g, h):
    shared = g.vertices & h.vertices
    if shared:
        raise LocationError(f"vertex sets overlap on {sort_tokens(shared)!r}; delocate first")


def _union_graph(g, h, extra=()) -> DirectedMultigraph:
    ends = {(0, e): st for e, st in g.ends.items()}
    ends.update(((1, e), st) for e, st in h.ends.items())
    ends.update(extra)
    return DirectedMultigraph(g.vertices | h.vertices, ends)


def tensor_graph(g: CoherentGraph, h: CoherentGraph) -> CoherentGraph:
    """Disjoint union with ``Coh(g) & Coh(h)``."""
    _disjoint(g, h)
    return CoherentGraph(_union_graph(g, h), coh_with(g.coh, h.coh))


def par_graph(g: CoherentGraph, h: CoherentGraph) -> CoherentGraph:
    """Disjoint union plus both directed edges between every cross pair of vertices.

    The fresh edges ``(2, (u, v))`` are incoherent with every other edge;
    the old ones keep ``Coh(g) (+) Coh(h)``.
    """
    _disjoint(g, h)
    fresh = {}
    for u in sort_tokens(g.vertices):
        for v in sort_tokens(h.vertices):
            fresh[(2, (u, v))] = (u, v)
            fresh[(2, (v, u))] = (v, u)
    graph = _union_graph(g, h, fresh.items())
    base = coh_plus(g.coh, h.coh)
    return CoherentGraph(graph, CoherenceRelation(graph.edges, base.pairs))


def conduct_tensor_test(a: Generator, b: Generator) -> Generator:
    """Test of ``A ⊗ B`` from tests of ``A`` and ``B``."""
    return Generator(par_graph(a.test, b.test))


def conduct_par_test(a: Generator, b: Generator) -> Generator:
    """Test of ``A ⅋ B`` from tests of ``A`` and ``B``."""
    return Generator(tensor_graph(a.test, b.test))


def atom_test(vertex) -> Generator:
    """Test of the unique conduct on a single vertex."""
    return Generator(CoherentGraph.empty([vertex]))


def member_of(f: CoherentGraph, t: Generator) -> bool:
    if f.vertices != t.vertices:
        raise InterfaceError("candidate and test live on different vertex sets")
    return orthogonal(f, t.test)


def linear_apply(f: CoherentGraph, g: CoherentGraph, interface) -> ExecutedGraph:
    """Apply the linear map ``f`` to the argument ``g`` placed on ``interface``.

    The side condition ``f ⊥ g ⊗ ∅`` on the rest of ``f``'s vertices is
    checked first; the result is ``f :: g`` on the remaining vertices.
    """
    interface = frozenset(interface)
    if g.vertices != interface:
        raise InterfaceError("argument must live exactly on the interface")
    if not interface <= f.vertices:
        raise InterfaceError("interface must be part of the map's vertices")
    padded = tensor_graph(g, CoherentGraph.empty(f.vertices - interface))
    witness = cycle_witness(f, padded)
    if witness is not None:
        raise NotOrthogonalError("map and argument close a coherent alternating cycle", witness)
    return execute(f, g)


def boxplus(g: CoherentGraph, h: CoherentGraph) -> CoherentGraph:
    """Incoherent sum: same vertices, tagged edges, ``Coh(g) (+) Coh(h)``."""
    if g.vertices != h.vertices:
        raise InterfaceError("incoherent sum needs equal vertex sets")
    return CoherentGraph(_union_graph(g, h), coh_plus(g.coh, h.coh))


def boxplus_all(graphs) -> CoherentGraph:
    """n-ary incoherent sum with edge ids ``(index, original_id)``."""
    graphs = list(graphs)
    if not graphs:
        raise ValueError("empty incoherent sum")
    verts = graphs[0].vertices
    if any(g.vertices != verts for g in graphs):
        raise InterfaceError("incoherent sum needs equal vertex sets")
    ends = {}
    pairs = set()
    for i, g in enumerate(graphs):
        ends.update(((i, e), st) for e, st in g.ends.items())
        pairs.update(frozenset((i, x) for x in p) for p in g.coh.pairs)
    graph = DirectedMultigraph(verts, ends)
    return CoherentGraph(graph, CoherenceRelation(graph.edges, frozenset(pairs)))


def canonical_form(g: CoherentGraph) -> CoherentGraph:
    """Incoherent sum of the maximal cliques, each fully coherent inside."""
    blocks = [g.subgraph(c) for c in maximal_cliques(g.coh) if c]
    if not blocks:
        return CoherentGraph.empty(g.vertices)
    return boxplus_all(CoherentGraph.with_coherence(b.graph, "full") for b in blocks)


def _clique_signatures(g: CoherentGraph) -> Counter:
    sigs = Counter()
    for c in maximal_cliques(g.coh):
        sigs[frozenset(Counter(g.ends[e] for e in c).items())] += 1
    return sigs


def equiv_R(g: CoherentGraph, h: CoherentGraph) -> bool:
    """Same vertices and the same maximal cliques up to edge renaming."""
    return g.vertices == h.vertices and _clique_signatures(g) == _clique_signatures(h)


def is_principal_generator(g: CoherentGraph) -> bool:
    """No two distinct edges share both source and target."""
    ends = list(g.ends.values())
    return len(set(ends)) == len(ends)
