"""Execution and orthogonality of coherent graphs.

Everything here reduces to depth-first search over alternating walks in a
plugging whose edge sets stay cliques of the plugging's coherence. Edges are
ranked in token order and coherence neighbourhoods are packed into integer
bitmasks, so "is this walk still a clique" is a single AND.
"""
from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .coherence import CoherenceRelation, CoherentGraph
from .errors import DivergentExecution, InterfaceError
from .graph import DirectedMultigraph, Plugging, plug_many, sort_tokens


@dataclass(frozen=True)
class Walk:
    """``vertices[j-1] --edges[j-1]--> vertices[j]``; edges are ``(tag, id)``."""

    vertices: tuple
    edges: tuple
    closed: bool = False

    def __len__(self):
        return len(self.edges)

    def __str__(self):
        parts = [str(self.vertices[0])]
        for (tag, e), v in zip(self.edges, self.vertices[1:]):
            parts.append(f"-[{tag}:{e}]->")
            parts.append(str(v))
        return " ".join(parts)


CycleWitness = Walk


class _Compiled:
    """Integer-indexed view of a plugging used by the searches."""

    def __init__(self, p: Plugging):
        self.plugging = p
        ids = p.graph.sorted_edges
        self.ids = ids
        rank = {e: i for i, e in enumerate(ids)}
        self.rank = rank
        self.src = [p.graph.ends[e][0] for e in ids]
        self.tgt = [p.graph.ends[e][1] for e in ids]
        self.tag = [e[0] for e in ids]
        n = len(ids)
        self.all = (1 << n) - 1
        if p.coh is None:
            self.mask = [self.all] * n
        else:
            nb = p.coh.neighbors
            self.mask = []
            for e in ids:
                m = 0
                for f in nb[e]:
                    m |= 1 << rank[f]
                self.mask.append(m)
        out = {v: [] for v in p.graph.vertices}
        for i in range(n):
            out[self.src[i]].append(i)
        self.out = out

    def walk(self, start, path, closed=False) -> Walk:
        verts = [start] + [self.tgt[i] for i in path]
        return Walk(tuple(verts), tuple(self.ids[i] for i in path), closed)

    def clique_mask(self, path) -> int:
        m = self.all
        for i in path:
            m &= self.mask[i]
        return m

    # -- open walks -------------------------------------------------------

    def walks(self, boundary, simple=False) -> list:
        boundary = frozenset(boundary)
        found = []
        for u in sort_tokens(boundary):
            if u not in self.out:
                continue
            self._extend(u, u, None, [], 0, self.all, {u}, boundary, simple, found)
        return found

    def _extend(self, start, v, last, path, used, allowed, seen, boundary, simple, found):
        if path and v in boundary:
            found.append(self.walk(start, path))
        for i in self.out[v]:
            if self.tag[i] == last or not allowed >> i & 1:
                continue
            if used >> i & 1:
                if not simple:
                    self._check_pump(start, path, i, allowed, boundary)
                continue
            w = self.tgt[i]
            if simple:
                if w in seen:
                    continue
                seen.add(w)
            path.append(i)
            self._extend(start, w, self.tag[i], path, used | 1 << i, allowed & self.mask[i],
                         seen, boundary, simple, found)
            path.pop()
            if simple:
                seen.discard(w)

    def _check_pump(self, start, path, i, allowed, boundary):
        """``path`` re-enters edge ``i``: the segment from its first use is a
        coherent alternating cycle. Raise if some pumped version can still
        leave the cycle and reach the boundary coherently."""
        j = path.index(i)
        for k in range(j + 1, len(path) + 1):
            e = path[k - 1]
            if self._reaches(self.tgt[e], self.tag[e], allowed, 0, boundary):
                raise DivergentExecution(
                    "coherent alternating cycle reachable between boundary vertices",
                    walk=self.walk(start, path[:j]),
                    cycle=self.walk(self.src[path[j]], path[j:], closed=True),
                )

    def _reaches(self, v, last, allowed, used, boundary) -> bool:
        if v in boundary:
            return True
        for i in self.out[v]:
            if self.tag[i] == last or used >> i & 1 or not allowed >> i & 1:
                continue
            if self._reaches(self.tgt[i], self.tag[i], allowed & self.mask[i], used | 1 << i, boundary):
                return True
        return False

    # -- closed walks -----------------------------------------------------

    def cycles(self, simple=False, max_len=None) -> Iterator[Walk]:
        """Coherent cyclically alternating closed walks without repeated edges.

        Each cycle is produced once, rotated to start at its lowest edge.
        """
        limit = len(self.ids) if max_len is None else max_len
        for s in range(len(self.ids)):
            v0 = self.src[s]
            higher = self.all & ~((1 << (s + 1)) - 1)
            seen = {v0, self.tgt[s]} if simple else None
            if simple and self.tgt[s] == v0:
                continue
            yield from self._close(s, v0, self.tgt[s], self.tag[s], [s], self.mask[s] & higher, seen, limit)

    def _close(self, s, v0, v, last, path, allowed, seen, limit):
        if len(path) >= limit:
            return
        for i in self.out[v]:
            if self.tag[i] == last or not allowed >> i & 1:
                continue
            w = self.tgt[i]
            if w == v0 and self.tag[i] != self.tag[s]:
                yield self.walk(v0, path + [i], closed=True)
            if seen is not None:
                if w in seen:
                    continue
                seen.add(w)
            path.append(i)
            yield from self._close(s, v0, w, self.tag[i], path, allowed & self.mask[i] & ~(1 << i), seen, limit)
            path.pop()
            if seen is not None:
                seen.discard(w)

    def shortest_cycle(self, simple=False):
        for _ in self.cycles(simple):
            break
        else:
            return None
        for length in range(2, len(self.ids) + 1, 2):
            for c in self.cycles(simple, max_len=length):
                if len(c) == length:
                    return c
        raise AssertionError("cycle found without a bounded witness")


def plug_coherent(*graphs) -> Plugging:
    """Plugging of coherent graphs carrying the ``&`` of their coherences."""
    return plug_many(*graphs)


def coherent_walks(p: Plugging, boundary: Iterable, simple=False) -> list:
    """All coherent alternating walks of ``p`` between vertices of ``boundary``.

    Raises DivergentExecution when infinitely many exist (a coherent
    alternating cycle can be pumped on some boundary-to-boundary walk).
    ``simple=True`` keeps only walks repeating no vertex and never diverges.
    """
    boundary = frozenset(boundary)
    if not boundary <= p.graph.vertices:
        raise InterfaceError("boundary must be a subset of the plugging's vertices")
    return _Compiled(p).walks(boundary, simple)


def coherent_cycles(p: Plugging, simple=False) -> list:
    return list(_Compiled(p).cycles(simple))


def validate_walk(p: Plugging, walk: Walk) -> bool:
    """Check chaining, (cyclic) alternation, coherence and edge non-repetition."""
    ends = p.graph.ends
    if len(walk.vertices) != len(walk.edges) + 1 or not walk.edges:
        return False
    for j, e in enumerate(walk.edges):
        if e not in ends or ends[e] != (walk.vertices[j], walk.vertices[j + 1]):
            return False
    tags = [e[0] for e in walk.edges]
    if any(a == b for a, b in zip(tags, tags[1:])):
        return False
    if walk.closed:
        if walk.vertices[0] != walk.vertices[-1] or tags[0] == tags[-1]:
            return False
        if len(set(walk.edges)) != len(walk.edges):
            return False
    if p.coh is not None:
        edges = list(walk.edges)
        if any(not p.coh.coherent(a, b) for i, a in enumerate(edges) for b in edges[i + 1:]):
            return False
    return True


def is_simple_walk(walk: Walk) -> bool:
    verts = walk.vertices[:-1] if walk.closed else walk.vertices
    return len(set(verts)) == len(verts)


def has_chord(p: Plugging, cycle: Walk) -> bool:
    """Some edge of ``p`` joins two non-consecutive vertices of ``cycle``."""
    verts = list(cycle.vertices[:-1])
    n = len(verts)
    pos = {v: i for i, v in enumerate(verts)}
    for s, t in p.graph.ends.values():
        if s in pos and t in pos and s != t:
            d = abs(pos[s] - pos[t])
            if d not in (1, n - 1):
                return True
    return False


class ExecutedGraph(CoherentGraph):
    """Result of execution; every edge id is the provenance of its walk.

    An edge id is the tuple of ``(tag, original_edge_id)`` steps of the
    coherent alternating walk it stands for, and ``walks`` maps it back to
    the full :class:`Walk` (with intermediate vertices).
    """

    def __init__(self, graph: DirectedMultigraph, coh: CoherenceRelation, walks: Mapping):
        super().__init__(graph, coh)
        object.__setattr__(self, "walks", MappingProxyType(dict(walks)))

    def provenance(self, e) -> tuple:
        return e


def _assemble(compiled: _Compiled, vertices, walks) -> ExecutedGraph:
    ends = {}
    masks = []
    used = []
    for w in walks:
        ends[w.edges] = (w.vertices[0], w.vertices[-1])
        path = [compiled.rank[e] for e in w.edges]
        masks.append(compiled.clique_mask(path))
        bits = 0
        for i in path:
            bits |= 1 << i
        used.append(bits)
    pairs = set()
    for a in range(len(walks)):
        for b in range(a + 1, len(walks)):
            if used[b] & ~masks[a] == 0:
                pairs.add(frozenset((walks[a].edges, walks[b].edges)))
    graph = DirectedMultigraph(frozenset(vertices), ends)
    return ExecutedGraph(graph, CoherenceRelation(graph.edges, frozenset(pairs)),
                         {w.edges: w for w in walks})


def _execute(g, h, simple):
    p = plug_coherent(g, h)
    boundary = g.vertices ^ h.vertices
    compiled = _Compiled(p)
    return _assemble(compiled, boundary, compiled.walks(boundary, simple))


def execute(g: CoherentGraph, h: CoherentGraph) -> ExecutedGraph:
    """``g :: h``: one edge per coherent alternating walk between vertices of
    the symmetric difference, coherent when the walks are mutually coherent."""
    return _execute(g, h, simple=False)


def execute_simple(g: CoherentGraph, h: CoherentGraph) -> ExecutedGraph:
    return _execute(g, h, simple=True)


def execute_many(*graphs) -> ExecutedGraph:
    """Execution over an n-ary plugging; boundary is the vertices owned by one graph."""
    p = plug_coherent(*graphs)
    compiled = _Compiled(p)
    boundary = p.boundary()
    return _assemble(compiled, boundary, compiled.walks(boundary))


def _check_interface(g, h):
    if g.vertices != h.vertices:
        raise InterfaceError(
            f"orthogonality needs equal vertex sets, got {sort_tokens(g.vertices)!r} "
            f"and {sort_tokens(h.vertices)!r}"
        )


def cycle_witness(g: CoherentGraph, h: CoherentGraph, simple=False):
    """A shortest coherent alternating cycle of ``g □ h``, or None."""
    _check_interface(g, h)
    return _Compiled(plug_coherent(g, h)).shortest_cycle(simple)


def orthogonal(g: CoherentGraph, h: CoherentGraph, return_witness=False):
    """``g ⊥ h``: no coherent cyclically alternating cycle in the plugging."""
    w = cycle_witness(g, h)
    return (w is None, w) if return_witness else w is None


def orthogonal_simple(g: CoherentGraph, h: CoherentGraph, return_witness=False):
    """Like :func:`orthogonal` but only simple cycles count."""
    w = cycle_witness(g, h, simple=True)
    return (w is None, w) if return_witness else w is None
