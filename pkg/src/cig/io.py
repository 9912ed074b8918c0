"""The ``.cig`` text format and DOT export.

One declaration per line, ``#`` starts a comment::

    vertex <name>
    edge <id> <src> <dst>
    coh <id1> <id2>                       # explicit coherent pair, or
    coherence full|simple|chordless       # derived relation

Explicit ``coh`` lines and a ``coherence`` directive are mutually exclusive.
Without either, distinct edges are incoherent. Edge endpoints are declared
as vertices implicitly.
"""
from __future__ import annotations

from .coherence import CoherenceRelation, CoherentGraph, maximal_cliques
from .errors import FormatError
from .graph import DirectedMultigraph, sort_tokens, token_key

DIRECTIVES = ("full", "simple", "chordless")
PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan", "gold", "gray40")


def parse_cig(text: str) -> CoherentGraph:
    vertices = []
    edges = {}
    pairs = []
    directive = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, *args = line.split()
        if word == "vertex" and len(args) == 1:
            vertices.append(args[0])
        elif word == "edge" and len(args) == 3:
            e, s, t = args
            if e in edges:
                raise FormatError(f"duplicate edge id {e!r}", lineno)
            edges[e] = (s, t)
        elif word == "coh" and len(args) == 2:
            if directive is not None:
                raise FormatError("'coh' pairs cannot be mixed with a coherence directive", lineno)
            a, b = args
            for x in (a, b):
                if x not in edges:
                    raise FormatError(f"unknown edge {x!r} in coherence pair", lineno)
            if a != b:
                pairs.append((a, b))
        elif word == "coherence" and len(args) == 1:
            if args[0] not in DIRECTIVES:
                raise FormatError(f"unknown coherence {args[0]!r}; use one of {', '.join(DIRECTIVES)}", lineno)
            if pairs or directive is not None:
                raise FormatError("only one coherence directive, and no 'coh' pairs alongside it", lineno)
            directive = args[0]
        else:
            raise FormatError(f"cannot parse {line!r}", lineno)
    verts = set(vertices)
    for s, t in edges.values():
        verts.update((s, t))
    graph = DirectedMultigraph(frozenset(verts), edges)
    if directive is not None:
        return CoherentGraph.with_coherence(graph, directive)
    return CoherentGraph(graph, CoherenceRelation(graph.edges, frozenset(frozenset(p) for p in pairs)))


def read_cig(path) -> CoherentGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_cig(fh.read())


def format_token(token) -> str:
    """Whitespace-free rendering of a token; tuples become ``[a,b,...]``."""
    if isinstance(token, tuple):
        return "[" + ",".join(format_token(t) for t in token) + "]"
    text = str(token)
    if not text or any(ch.isspace() for ch in text) or "#" in text:
        raise FormatError(f"token {token!r} cannot be written in .cig format")
    return text


def format_cig(g: CoherentGraph) -> str:
    lines = [f"vertex {format_token(v)}" for v in g.graph.sorted_vertices]
    names = {e: format_token(e) for e in g.graph.sorted_edges}
    if len(set(names.values())) != len(names):
        raise FormatError("edge ids collide once rendered as text")
    for e in g.graph.sorted_edges:
        s, t = g.ends[e]
        lines.append(f"edge {names[e]} {format_token(s)} {format_token(t)}")
    if len(g.edges) > 1 and g.coh.is_full():
        lines.append("coherence full")
    else:
        for a, b in sorted((sort_tokens(p) for p in g.coh.pairs), key=token_key):
            lines.append(f"coh {names[a]} {names[b]}")
    return "\n".join(lines) + "\n"


def write_cig(g: CoherentGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_cig(g))


def _quote(x) -> str:
    return '"' + format_token(x).replace('"', '\\"') + '"'


def to_dot(g: CoherentGraph, labels=None, name="G") -> str:
    """DOT rendering; a symmetric pair of edges is drawn once without arrowheads.

    Edges are coloured by the first maximal clique containing them, so a
    fully coherent graph is drawn in black.
    """
    cliques = maximal_cliques(g.coh)
    colour = {}
    if len(cliques) > 1:
        for k, c in enumerate(cliques):
            for e in c:
                colour.setdefault(e, PALETTE[k % len(PALETTE)])
    lines = [f"digraph {name} {{"]
    for v in g.graph.sorted_vertices:
        label = labels.get(v, v) if labels else v
        lines.append(f"  {_quote(v)} [label={_quote(label)}];")
    pending = {}
    drawn = set()
    for e in g.graph.sorted_edges:
        s, t = g.ends[e]
        if s != t:
            pending.setdefault((s, t), []).append(e)
    for e in g.graph.sorted_edges:
        if e in drawn:
            continue
        s, t = g.ends[e]
        attrs = []
        partners = [f for f in pending.get((t, s), []) if f not in drawn] if s != t else []
        drawn.add(e)
        if partners:
            drawn.add(partners[0])
            attrs.append("dir=none")
        if e in colour:
            attrs.append(f"color={colour[e]}")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(s)} -> {_quote(t)}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
