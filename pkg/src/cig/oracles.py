"""Brute-force reference implementations.

Nothing here shares code with the search engine in :mod:`cig.execution` or
the clique enumerator in :mod:`cig.coherence`; they exist to cross-check
those on small inputs.
"""
from __future__ import annotations

from itertools import combinations, permutations, product

from .graph import sort_tokens, token_key


def brute_maximal_cliques(rel) -> list:
    """Maximal cliques by testing every subset (webs of size <= ~14)."""
    web = sort_tokens(rel.web)
    ok = lambda a, b: a == b or frozenset((a, b)) in rel.pairs  # noqa: E731
    cliques = []
    for r in range(len(web), -1, -1):
        for subset in combinations(web, r):
            if all(ok(a, b) for a, b in combinations(subset, 2)):
                s = frozenset(subset)
                if not any(s < c for c in cliques):
                    cliques.append(s)
    return sorted((tuple(sort_tokens(c)) for c in cliques), key=token_key)


def brute_chordless_pairs(g) -> frozenset:
    """Coherent distinct pairs of the chordless coherence, by a triple loop over edges."""
    g = getattr(g, "graph", g)
    ends = {e: set(st) for e, st in g.ends.items()}
    pairs = set()
    for e, f in combinations(sort_tokens(ends), 2):
        if ends[e] & ends[f]:
            continue
        if any(ends[x] & ends[e] and ends[x] & ends[f] for x in ends):
            continue
        pairs.add(frozenset((e, f)))
    return frozenset(pairs)


def _rotate_to_min(edges) -> tuple:
    k = min(range(len(edges)), key=lambda i: token_key(edges[i]))
    return tuple(edges[k:] + edges[:k])


def brute_simple_chordless_cycles(graphs, own_graph_chords=False) -> set:
    """Simple, chordless, cyclically alternating cycles of the plugging of ``graphs``.

    ``graphs`` are plain directed multigraphs (or coherent graphs, whose
    coherence is ignored). Cycles are edge tuples of ``(index, edge_id)``
    rotated to start at their least edge. Exponential: vertex sequences are
    enumerated by permutation.

    By default a chord is any edge joining two non-consecutive cycle
    vertices. With ``own_graph_chords`` an edge of graph ``X`` is a chord
    when its endpoints are cycle vertices not joined by a cycle edge of
    ``X``; this also catches an edge of ``X`` running alongside a cycle
    edge of the other graph.
    """
    graphs = [getattr(g, "graph", g) for g in graphs]
    between = {}
    joined = [set() for _ in graphs]
    for tag, g in enumerate(graphs):
        for e, (s, t) in g.ends.items():
            between.setdefault((s, t), []).append((tag, e))
            if s != t:
                joined[tag].add(frozenset((s, t)))
    all_pairs = set().union(*joined)
    verts = sort_tokens(set().union(*(g.vertices for g in graphs)))
    found = set()
    for k in range(2, len(verts) + 1):
        for first_idx, first in enumerate(verts):
            for rest in permutations(verts[first_idx + 1:], k - 1):
                cyc = (first,) + rest
                steps = [between.get((cyc[i], cyc[(i + 1) % k]), []) for i in range(k)]
                if not all(steps):
                    continue
                far = [frozenset((cyc[i], cyc[j])) for i, j in combinations(range(k), 2)
                       if (j - i) % k not in (1, k - 1)]
                if any(p in all_pairs for p in far):
                    continue
                for choice in product(*steps):
                    tags = [c[0] for c in choice]
                    if any(tags[i] == tags[(i + 1) % k] for i in range(k)):
                        continue
                    if own_graph_chords and _side_chord(cyc, tags, joined):
                        continue
                    found.add(_rotate_to_min(list(choice)))
    return found


def _side_chord(cyc, tags, joined) -> bool:
    k = len(cyc)
    for tag, pairs in enumerate(joined):
        own = {frozenset((cyc[i], cyc[(i + 1) % k])) for i in range(k) if tags[i] == tag}
        for i, j in combinations(range(k), 2):
            p = frozenset((cyc[i], cyc[j]))
            if p in pairs and p not in own:
                return True
    return False


def induced_p4(adjacency) -> tuple | None:
    """Some 4 vertices inducing a path, in an undirected adjacency dict, or None."""
    verts = sort_tokens(adjacency)
    for quad in combinations(verts, 4):
        degrees = sorted(sum(1 for w in quad if w != v and w in adjacency[v]) for v in quad)
        if degrees == [1, 1, 2, 2]:
            return quad
    return None


def brute_alternating_walks(graphs, boundary, coherent, max_len) -> set:
    """Alternating walks (any tags differing consecutively) between ``boundary``
    vertices of length at most ``max_len`` whose edge set satisfies ``coherent``.

    Edges are ``(index, edge_id)``; used to cross-check the engine on tiny
    inputs by plain breadth-first expansion.
    """
    graphs = [getattr(g, "graph", g) for g in graphs]
    out_edges = {}
    for tag, g in enumerate(graphs):
        for e, (s, t) in g.ends.items():
            out_edges.setdefault(s, []).append(((tag, e), t))
    found = set()
    frontier = [((v,), ()) for v in boundary]
    for _ in range(max_len):
        nxt = []
        for verts, edges in frontier:
            for e, t in out_edges.get(verts[-1], []):
                if edges and edges[-1][0] == e[0]:
                    continue
                walk = (verts + (t,), edges + (e,))
                nxt.append(walk)
                if t in boundary and coherent(walk[1]):
                    found.add(walk[1])
        frontier = nxt
    return found
