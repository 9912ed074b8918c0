"""Cographic proof structures: formula cographs, axiom matchings, correctness, cut."""
from __future__ import annotations

from dataclasses import dataclass

from ..coherence import CoherenceRelation, CoherentGraph
from ..conducts import atom_test, boxplus, par_graph, tensor_graph
from ..errors import CycleError, DualityError, InterfaceError, LinkError
from ..execution import Walk, cycle_witness
from ..graph import DirectedMultigraph, sort_tokens, token_key
from .formula import Atom, Formula, Par, leaves


def formula_cograph(f: Formula) -> CoherentGraph:
    """Canonical test of the conduct of ``f`` with every atom read as ``{*}``.

    Vertices are leaf indices. ``⅋`` becomes the tensor of tests (disjoint
    union), ``⊗`` the par of tests (join with both directions). Edge ids are
    the ``(source, target)`` pairs, which is unambiguous because the result
    has no parallel edges.
    """
    counter = iter(range(len(leaves(f))))

    def build(node):
        if isinstance(node, Atom):
            return atom_test(next(counter)).test
        left, right = build(node.left), build(node.right)
        if isinstance(node, Par):
            return tensor_graph(left, right)
        return par_graph(left, right)

    g = build(f)
    return g.relabel_edges(lambda e: g.ends[e])


@dataclass(frozen=True)
class Matching:
    """A 1-regular undirected graph given by its unordered pairs."""

    pairs: frozenset

    def __post_init__(self):
        pairs = frozenset(frozenset(p) for p in self.pairs)
        seen = set()
        for p in pairs:
            if len(p) != 2:
                raise LinkError(f"link {sort_tokens(p)!r} must join two distinct vertices")
            if p & seen:
                raise LinkError(f"vertex in {sort_tokens(p)!r} is linked twice")
            seen |= p
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def of(cls, pairs) -> Matching:
        return cls(frozenset(frozenset(p) for p in pairs))

    @classmethod
    def from_graph(cls, g) -> Matching:
        """Read a symmetric (or one-directional) edge set as a matching."""
        g = getattr(g, "graph", g)
        pairs = {frozenset((s, t)) for s, t in g.ends.values()}
        m = cls(frozenset(pairs))
        if m.vertices != g.vertices:
            raise LinkError("every vertex of a matching graph must be linked")
        return m

    @property
    def vertices(self) -> frozenset:
        return frozenset().union(*self.pairs) if self.pairs else frozenset()

    def partner(self, v):
        for p in self.pairs:
            if v in p:
                (w,) = p - {v}
                return w
        raise KeyError(v)

    def partners(self) -> dict:
        out = {}
        for p in self.pairs:
            a, b = tuple(p)
            out[a], out[b] = b, a
        return out

    def sorted_pairs(self) -> list:
        return sorted((tuple(sort_tokens(p)) for p in self.pairs), key=token_key)

    def as_graph(self) -> CoherentGraph:
        """Both directions of each link; distinct links coherent, the two
        directions of one link incoherent."""
        ends = {}
        for u, v in self.sorted_pairs():
            ends[(u, v)] = (u, v)
            ends[(v, u)] = (v, u)
        graph = DirectedMultigraph(self.vertices, ends)
        coh = CoherenceRelation.from_predicate(graph.edges, lambda e, f: frozenset(e) != frozenset(f))
        return CoherentGraph(graph, coh)

    def rename(self, mapping) -> Matching:
        return Matching(frozenset(frozenset(mapping[v] for v in p) for p in self.pairs))

    def __str__(self):
        return ",".join(f"{u}-{v}" for u, v in self.sorted_pairs())


@dataclass(frozen=True)
class CographicProof:
    formula: Formula
    cograph: CoherentGraph
    links: Matching

    @property
    def labels(self) -> list:
        return leaves(self.formula)


def build_proof(f: Formula, pairs) -> CographicProof:
    """Validate ``pairs`` (leaf index pairs) as axiom links for ``f``."""
    labels = leaves(f)
    n = len(labels)
    links = Matching.of(tuple(p) for p in pairs)
    for p in links.pairs:
        for i in p:
            if not isinstance(i, int) or not 0 <= i < n:
                raise LinkError(f"leaf index {i!r} out of range 0..{n - 1}")
    missing = sorted(set(range(n)) - links.vertices)
    if missing:
        raise LinkError(f"leaves {missing} are not linked")
    for p in links.pairs:
        i, j = sorted(p)
        if not labels[i].is_dual_of(labels[j]):
            raise DualityError(f"leaves {i} ({labels[i]}) and {j} ({labels[j]}) are not dual")
    return CographicProof(f, formula_cograph(f), links)


@dataclass(frozen=True)
class Verdict:
    correct: bool
    witness: Walk | None = None

    def __bool__(self):
        return self.correct

    def __str__(self):
        return "Correct" if self.correct else "Incorrect"


def check_correctness(p: CographicProof) -> Verdict:
    """Correct iff the links are orthogonal to the chordless-coherent cograph."""
    w = cycle_witness(p.cograph, p.links.as_graph())
    return Verdict(w is None, w)


def cut_eliminate(m: Matching, m2: Matching, shared) -> Matching:
    """Compose two matchings along ``shared`` by following alternating paths."""
    shared = frozenset(shared)
    if shared != m.vertices & m2.vertices:
        raise InterfaceError("shared vertices must be exactly the common vertices")
    sides = (m.partners(), m2.partners())
    outer = sort_tokens(m.vertices ^ m2.vertices)
    visited = set()
    pairs = []
    for u in outer:
        if u in visited:
            continue
        side = 0 if u in sides[0] else 1
        v = sides[side][u]
        visited.add(u)
        while v in shared:
            visited.add(v)
            side = 1 - side
            v = sides[side][v]
            visited.add(v)
        visited.add(v)
        pairs.append((u, v))
    leftover = sort_tokens(shared - visited)
    if leftover:
        start = leftover[0]
        cycle = [start]
        v, side = sides[0][start], 0
        while v != start:
            cycle.append(v)
            side = 1 - side
            v = sides[side][v]
        raise CycleError(f"alternating cycle through {cycle!r}", cycle)
    return Matching.of(pairs)


def nondet_proof(matchings) -> CoherentGraph:
    """Non-deterministic sum of proofs: left fold of the incoherent sum."""
    matchings = list(matchings)
    if not matchings:
        raise ValueError("a sum needs at least one proof")
    verts = matchings[0].vertices
    if any(mm.vertices != verts for mm in matchings):
        raise InterfaceError("summed matchings must cover the same vertices")
    acc = matchings[0].as_graph()
    for mm in matchings[1:]:
        acc = boxplus(acc, mm.as_graph())
    return acc


def all_perfect_matchings(items) -> list:
    """Every pairing of ``items`` (even length), in a fixed order."""
    items = list(items)
    if not items:
        return [[]]
    first, rest = items[0], items[1:]
    out = []
    for k, other in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for tail in all_perfect_matchings(remaining):
            out.append([(first, other)] + tail)
    return out


def labels_for(n: int, pairs, alphabet="ABCDEFGHIJKLMNOPQRSTUVWXYZ") -> list:
    """Give each link its own atom, positive on the lower index."""
    labels = [None] * n
    for k, (i, j) in enumerate(sorted(tuple(sorted(p)) for p in pairs)):
        name = alphabet[k] if k < len(alphabet) else f"X{k}"
        labels[i], labels[j] = Atom(name, True), Atom(name, False)
    return labels


def is_dual_matching(f: Formula, pairs) -> bool:
    labels = leaves(f)
    return all(labels[i].is_dual_of(labels[j]) for i, j in pairs)


def admissible_matchings(f: Formula) -> list:
    """All perfect matchings of ``f``'s leaves joining dual atoms."""
    labels = leaves(f)
    if len(labels) % 2:
        return []
    return [ps for ps in all_perfect_matchings(range(len(labels))) if is_dual_matching(f, ps)]


__all__ = [
    "CographicProof", "Matching", "Verdict", "admissible_matchings", "all_perfect_matchings",
    "build_proof", "check_correctness", "cut_eliminate", "formula_cograph", "is_dual_matching",
    "labels_for", "nondet_proof",
]
