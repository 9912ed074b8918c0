"""Coherence relations on edge webs and coherent graphs.

A relation is stored as the set of coherent unordered pairs of *distinct*
elements; reflexivity is implicit.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import WebError
from .graph import DirectedMultigraph, sort_tokens, token_key


@dataclass(frozen=True)
class CoherenceRelation:
    web: frozenset
    pairs: frozenset

    def __post_init__(self):
        web = frozenset(self.web)
        pairs = frozenset(frozenset(p) for p in self.pairs)
        for p in pairs:
            if len(p) != 2:
                raise WebError(f"coherent pair {sorted(p, key=token_key)!r} is not two distinct elements")
            if not p <= web:
                raise WebError(f"pair {sort_tokens(p)!r} leaves the web")
        object.__setattr__(self, "web", web)
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def full(cls, web) -> CoherenceRelation:
        web = sort_tokens(web)
        return cls(frozenset(web), frozenset(frozenset(p) for p in combinations(web, 2)))

    @classmethod
    def discrete(cls, web) -> CoherenceRelation:
        """Every pair of distinct elements incoherent."""
        return cls(frozenset(web), frozenset())

    @classmethod
    def from_predicate(cls, web, coherent) -> CoherenceRelation:
        web = sort_tokens(web)
        return cls(frozenset(web), frozenset(frozenset((a, b)) for a, b in combinations(web, 2) if coherent(a, b)))

    @cached_property
    def neighbors(self) -> dict:
        """Closed coherence neighbourhoods: ``neighbors[x]`` contains ``x``."""
        nb = {x: {x} for x in self.web}
        for p in self.pairs:
            a, b = tuple(p)
            nb[a].add(b)
            nb[b].add(a)
        return {x: frozenset(s) for x, s in nb.items()}

    @cached_property
    def sorted_web(self) -> tuple:
        return tuple(sort_tokens(self.web))

    def coherent(self, a, b) -> bool:
        if a not in self.web or b not in self.web:
            raise WebError(f"{a!r} or {b!r} is not in the web")
        return a == b or frozenset((a, b)) in self.pairs

    def strictly_coherent(self, a, b) -> bool:
        return a != b and self.coherent(a, b)

    def strictly_incoherent(self, a, b) -> bool:
        return a != b and not self.coherent(a, b)

    def is_full(self) -> bool:
        n = len(self.web)
        return len(self.pairs) == n * (n - 1) // 2

    def relabel(self, fn, keep=None) -> CoherenceRelation:
        web = [x for x in self.web if keep is None or keep(x)]
        kept = set(web)
        pairs = {frozenset(map(fn, p)) for p in self.pairs if p <= kept}
        return CoherenceRelation(frozenset(map(fn, web)), frozenset(pairs))

    def restrict(self, subset) -> CoherenceRelation:
        subset = frozenset(subset)
        return CoherenceRelation(subset & self.web, frozenset(p for p in self.pairs if p <= subset))

    def tagged(self, tag) -> CoherenceRelation:
        return self.relabel(lambda x: (tag, x))

    def __repr__(self):
        shown = sorted((sort_tokens(p) for p in self.pairs), key=token_key)
        return f"CoherenceRelation(web={list(self.sorted_web)!r}, pairs={shown!r})"


def _sum(a: CoherenceRelation, b: CoherenceRelation, cross: bool) -> CoherenceRelation:
    ta, tb = a.tagged(0), b.tagged(1)
    pairs = set(ta.pairs | tb.pairs)
    if cross:
        pairs.update(frozenset((x, y)) for x in ta.web for y in tb.web)
    return CoherenceRelation(ta.web | tb.web, frozenset(pairs))


def coh_with(a: CoherenceRelation, b: CoherenceRelation) -> CoherenceRelation:
    """``a & b`` on the tagged disjoint web; every cross pair is coherent."""
    return _sum(a, b, cross=True)


def coh_plus(a: CoherenceRelation, b: CoherenceRelation) -> CoherenceRelation:
    """``a (+) b`` on the tagged disjoint web; every cross pair is incoherent."""
    return _sum(a, b, cross=False)


def is_clique(rel: CoherenceRelation, subset: Iterable) -> bool:
    subset = list(subset)
    for x in subset:
        if x not in rel.web:
            raise WebError(f"{x!r} is not in the web")
    nb = rel.neighbors
    return all(y in nb[x] for x, y in combinations(subset, 2))


def maximal_cliques(rel: CoherenceRelation) -> list:
    """All inclusion-maximal cliques, as sorted tuples, in canonical order.

    Pivoted Bron-Kerbosch; the pivot is the lowest-ranked element of P | X so
    the recursion is deterministic. The empty web has the single clique ().
    """
    order = rel.sorted_web
    rank = {x: i for i, x in enumerate(order)}
    adj = [0] * len(order)
    for p in rel.pairs:
        a, b = (rank[x] for x in p)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    found = []

    def lowest(bits):
        return (bits & -bits).bit_length() - 1

    def expand(r, p, x):
        if not p and not x:
            found.append(r)
            return
        pivot = lowest(p | x)
        candidates = p & ~adj[pivot]
        while candidates:
            v = lowest(candidates)
            bit = 1 << v
            candidates &= ~bit
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << len(order)) - 1, 0)
    cliques = [tuple(order[i] for i in range(len(order)) if r >> i & 1) for r in found]
    cliques.sort(key=lambda c: [rank[x] for x in c])
    return cliques


@dataclass(frozen=True)
class CoherentGraph:
    """A directed multigraph together with a coherence relation on its edges."""

    graph: DirectedMultigraph
    coh: CoherenceRelation

    def __post_init__(self):
        if self.coh.web != self.graph.edges:
            raise WebError("coherence web must be exactly the edge set")

    @classmethod
    def build(cls, edges=(), vertices=(), coherence="full") -> CoherentGraph:
        """Convenience constructor.

        ``coherence`` is ``"full"``, ``"discrete"``, ``"simple"``,
        ``"chordless"``, or an iterable of coherent id pairs.
        """
        g = DirectedMultigraph.from_edges(edges, vertices)
        return cls.with_coherence(g, coherence)

    @classmethod
    def with_coherence(cls, g: DirectedMultigraph, coherence="full") -> CoherentGraph:
        if isinstance(coherence, CoherenceRelation):
            rel = coherence
        elif coherence == "full":
            rel = CoherenceRelation.full(g.edges)
        elif coherence == "discrete":
            rel = CoherenceRelation.discrete(g.edges)
        elif coherence == "simple":
            rel = simple_coherence(g)
        elif coherence == "chordless":
            rel = chordless_coherence(g)
        else:
            rel = CoherenceRelation(g.edges, frozenset(frozenset(p) for p in coherence))
        return cls(g, rel)

    @classmethod
    def empty(cls, vertices) -> CoherentGraph:
        return cls(DirectedMultigraph.empty(vertices), CoherenceRelation.discrete(()))

    @property
    def vertices(self) -> frozenset:
        return self.graph.vertices

    @property
    def ends(self):
        return self.graph.ends

    @property
    def edges(self) -> frozenset:
        return self.graph.edges

    def __len__(self):
        return len(self.graph)

    def relabel_edges(self, fn) -> CoherentGraph:
        ends = {fn(e): st for e, st in self.graph.ends.items()}
        if len(ends) != len(self.graph.ends):
            raise ValueError("edge relabelling is not injective")
        return CoherentGraph(DirectedMultigraph(self.graph.vertices, ends), self.coh.relabel(fn))

    def subgraph(self, edges) -> CoherentGraph:
        edges = frozenset(edges)
        return CoherentGraph(self.graph.restrict_edges(edges), self.coh.restrict(edges))


def _ends_set(g: DirectedMultigraph, e) -> frozenset:
    return frozenset(g.ends[e])


def simple_coherence(g: DirectedMultigraph) -> CoherenceRelation:
    """Distinct edges are coherent iff they share no vertex (directions ignored)."""
    g = getattr(g, "graph", g)
    return CoherenceRelation.from_predicate(
        g.edges, lambda e, f: not (_ends_set(g, e) & _ends_set(g, f))
    )


def chordless_coherence(g: DirectedMultigraph) -> CoherenceRelation:
    """Distinct edges are incoherent iff incident or bridged by a third edge.

    A bridging edge has one endpoint on each side, so ``e`` and ``f`` are
    incoherent exactly when an endpoint of ``f`` lies in the closed
    neighbourhood of the endpoints of ``e``.
    """
    g = getattr(g, "graph", g)
    adjacent = {v: {v} for v in g.vertices}
    for s, t in g.ends.values():
        adjacent[s].add(t)
        adjacent[t].add(s)
    reach = {e: frozenset().union(*(adjacent[v] for v in g.ends[e])) for e in g.ends}
    return CoherenceRelation.from_predicate(g.edges, lambda e, f: not (reach[e] & _ends_set(g, f)))


def is_simple(g: CoherentGraph) -> bool:
    """Every coherent pair of distinct edges is vertex-disjoint."""
    return all(not (_ends_set(g.graph, a) & _ends_set(g.graph, b)) for a, b in map(tuple, g.coh.pairs))
