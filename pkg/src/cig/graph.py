"""Directed multigraphs with stable vertex and edge identities.

Vertices and edges are opaque hashable tokens (strings, ints, or tuples of
those). Every iteration goes through :func:`token_key` so that all the
algorithms built on top are deterministic.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Hashable, Iterable, Mapping

from .errors import DelocationError

VertexId = Hashable
EdgeId = Hashable


def token_key(token):
    """Total order on tokens: ints, then strings, then tuples (lexicographic)."""
    if isinstance(token, bool):
        return (0, int(token))
    if isinstance(token, int):
        return (0, token)
    if isinstance(token, str):
        return (1, token)
    if isinstance(token, tuple):
        return (2, tuple(token_key(t) for t in token))
    if isinstance(token, frozenset):
        return (3, tuple(sorted(token_key(t) for t in token)))
    return (4, repr(token))


def sort_tokens(tokens: Iterable) -> list:
    return sorted(tokens, key=token_key)


@dataclass(frozen=True)
class DirectedMultigraph:
    """A finite directed multigraph.

    ``ends`` maps every edge id to its ``(source, target)`` pair. Parallel
    edges and self-loops are allowed.
    """

    vertices: frozenset
    ends: Mapping[EdgeId, tuple]

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        ends = {e: (s, t) for e, (s, t) in self.ends.items()}
        for e, (s, t) in ends.items():
            if s not in self.vertices or t not in self.vertices:
                raise ValueError(f"edge {e!r} has an endpoint outside the vertex set")
        object.__setattr__(self, "ends", MappingProxyType(ends))

    def __eq__(self, other):
        if not isinstance(other, DirectedMultigraph):
            return NotImplemented
        return self.vertices == other.vertices and dict(self.ends) == dict(other.ends)

    def __hash__(self):
        return hash((self.vertices, frozenset(self.ends.items())))

    @classmethod
    def from_edges(cls, edges, vertices=()) -> DirectedMultigraph:
        """Build a graph from ``(id, src, tgt)`` triples; endpoints are added as vertices."""
        ends = {}
        verts = set(vertices)
        for e, s, t in edges:
            if e in ends:
                raise ValueError(f"duplicate edge id {e!r}")
            ends[e] = (s, t)
            verts.update((s, t))
        return cls(frozenset(verts), ends)

    @classmethod
    def empty(cls, vertices) -> DirectedMultigraph:
        return cls(frozenset(vertices), {})

    @property
    def edges(self) -> frozenset:
        return frozenset(self.ends)

    def src(self, e):
        return self.ends[e][0]

    def tgt(self, e):
        return self.ends[e][1]

    @cached_property
    def sorted_vertices(self) -> tuple:
        return tuple(sort_tokens(self.vertices))

    @cached_property
    def sorted_edges(self) -> tuple:
        return tuple(sort_tokens(self.ends))

    def endpoint_multiset(self) -> Counter:
        return Counter(self.ends.values())

    def restrict_edges(self, keep) -> DirectedMultigraph:
        keep = set(keep)
        return DirectedMultigraph(self.vertices, {e: st for e, st in self.ends.items() if e in keep})

    def __len__(self):
        return len(self.ends)

    def __repr__(self):
        body = ", ".join(f"{e!r}: {s!r}->{t!r}" for e in self.sorted_edges for s, t in [self.ends[e]])
        return f"DirectedMultigraph(V={sort_tokens(self.vertices)!r}, E={{{body}}})"


@dataclass(frozen=True)
class Plugging:
    """Union of several graphs remembering where every edge came from.

    Edge ids of ``graph`` are ``(tag, original_id)`` with ``tag`` the index
    of the component. ``coh`` is an optional coherence relation over those
    tagged ids; ``None`` means every pair is coherent.
    """

    graph: DirectedMultigraph
    components: tuple
    coh: object = None
    provenance: Mapping = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(frozenset(c) for c in self.components))
        object.__setattr__(self, "provenance", MappingProxyType({e: e[0] for e in self.graph.ends}))

    @property
    def arity(self) -> int:
        return len(self.components)

    def tag(self, e) -> int:
        return e[0]

    def component_edges(self, tag) -> list:
        return [e for e in self.graph.sorted_edges if e[0] == tag]

    def boundary(self) -> frozenset:
        """Vertices lying in exactly one component."""
        count = Counter(v for comp in self.components for v in comp)
        return frozenset(v for v, n in count.items() if n == 1)

    def restrict(self, tags) -> Plugging:
        """Keep only the components listed in ``tags``, retagged 0, 1, ..."""
        tags = list(tags)
        retag = {old: new for new, old in enumerate(tags)}
        ends = {(retag[e[0]], e[1]): st for e, st in self.graph.ends.items() if e[0] in retag}
        comps = [self.components[t] for t in tags]
        verts = frozenset().union(*comps) if comps else frozenset()
        coh = None
        if self.coh is not None:
            coh = self.coh.relabel(lambda e: (retag[e[0]], e[1]), keep=lambda e: e[0] in retag)
        return Plugging(DirectedMultigraph(verts, ends), comps, coh)


def _underlying(g):
    return getattr(g, "graph", g)


def plug_many(*graphs) -> Plugging:
    """Plug any number of graphs (plain or coherent, mixed freely).

    Each plain graph is read with full coherence. The resulting coherence is
    the ``&`` of the components: edges of distinct components are coherent.
    """
    from .coherence import CoherenceRelation

    verts = set()
    ends = {}
    comps = []
    for tag, g in enumerate(graphs):
        base = _underlying(g)
        comps.append(base.vertices)
        verts |= base.vertices
        for e, st in base.ends.items():
            ends[(tag, e)] = st
    if all(_underlying(g) is g for g in graphs):
        coh = None
    else:
        pairs = set()
        tagged = [[(tag, e) for e in _underlying(g).ends] for tag, g in enumerate(graphs)]
        for tag, g in enumerate(graphs):
            if _underlying(g) is g:
                es = tagged[tag]
                pairs.update(frozenset((a, b)) for i, a in enumerate(es) for b in es[i + 1:])
            else:
                pairs.update(frozenset(((tag, a), (tag, b))) for a, b in map(tuple, g.coh.pairs))
        for i in range(len(tagged)):
            for j in range(i + 1, len(tagged)):
                pairs.update(frozenset((a, b)) for a in tagged[i] for b in tagged[j])
        coh = CoherenceRelation(frozenset(ends), frozenset(pairs))
    return Plugging(DirectedMultigraph(frozenset(verts), ends), tuple(comps), coh)


def plug(g, h) -> Plugging:
    return plug_many(g, h)


def plug3(f, g, h) -> Plugging:
    return plug_many(f, g, h)


def rename_vertices(g: DirectedMultigraph, mapping: Mapping) -> DirectedMultigraph:
    """Delocate ``g`` along the injective renaming ``mapping``.

    Edge ids and multiplicities are preserved. Raises DelocationError when
    ``mapping`` is not defined on every vertex or sends two vertices to the
    same name.
    """
    missing = [v for v in g.vertices if v not in mapping]
    if missing:
        raise DelocationError(f"renaming undefined on {sort_tokens(missing)!r}")
    image = [mapping[v] for v in g.vertices]
    if len(set(image)) != len(image):
        raise DelocationError("renaming is not injective on the vertex set")
    ends = {e: (mapping[s], mapping[t]) for e, (s, t) in g.ends.items()}
    return DirectedMultigraph(frozenset(image), ends)


def graphs_equiv(g: DirectedMultigraph, h: DirectedMultigraph) -> bool:
    """Same vertices and an edge bijection preserving sources and targets."""
    g, h = _underlying(g), _underlying(h)
    return g.vertices == h.vertices and g.endpoint_multiset() == h.endpoint_multiset()
