"""Seeded randomized and exhaustive property suites.

Each suite returns a :class:`SuiteResult`; ``cig selftest`` prints them as a
table and the acceptance tests assert on them. Everything is driven by
``random.Random(seed)`` so a (seed, cases) pair always reproduces the same
run.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations

from .coherence import (
    CoherenceRelation,
    CoherentGraph,
    chordless_coherence,
    is_simple,
    maximal_cliques,
    simple_coherence,
)
from .conducts import (
    boxplus,
    canonical_form,
    equiv_R,
    is_principal_generator,
    par_graph,
    tensor_graph,
)
from .errors import CycleError, DivergentExecution
from .execution import (
    _Compiled,
    coherent_cycles,
    coherent_walks,
    execute,
    execute_many,
    execute_simple,
    is_simple_walk,
    orthogonal,
    orthogonal_simple,
    plug_coherent,
)
from .graph import DirectedMultigraph, graphs_equiv, plug, rename_vertices
from .mll.enumerate import binary_formulas, cograph_formulas
from .mll.formula import Par, Tensor, dual, leaves, relabel
from .mll.proofnet import (
    Matching,
    all_perfect_matchings,
    build_proof,
    check_correctness,
    cut_eliminate,
    formula_cograph,
    labels_for,
)
from .mll.sequent import sequent_oracle
from .oracles import brute_chordless_pairs, brute_simple_chordless_cycles, induced_p4


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: int = 0
    skipped: int = 0
    seconds: float = 0.0
    notes: list = field(default_factory=list)
    first_failure: object = None

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.cases > 0

    def fail(self, detail):
        self.failures += 1
        if self.first_failure is None:
            self.first_failure = detail


# -- random generators --------------------------------------------------------

def random_graph(rng, vertices, n_edges, loops=True, prefix="e") -> DirectedMultigraph:
    vertices = list(vertices)
    edges = []
    for k in range(n_edges if vertices else 0):
        s, t = rng.choice(vertices), rng.choice(vertices)
        if not loops:
            if len(vertices) < 2:
                break
            while s == t:
                t = rng.choice(vertices)
        edges.append((f"{prefix}{k}", s, t))
    return DirectedMultigraph.from_edges(edges, vertices)


def random_relation(rng, web, p, allowed=None) -> CoherenceRelation:
    pairs = []
    for a, b in combinations(sorted(web), 2):
        pair = frozenset((a, b))
        if allowed is not None and pair not in allowed:
            continue
        if rng.random() < p:
            pairs.append(pair)
    return CoherenceRelation(frozenset(web), frozenset(pairs))


def random_coherent_graph(rng, vertices, n_edges, p=0.5, loops=True, prefix="e") -> CoherentGraph:
    g = random_graph(rng, vertices, n_edges, loops, prefix)
    return CoherentGraph(g, random_relation(rng, g.edges, p))


def random_simple_graph(rng, vertices, n_edges, p=0.7, prefix="e", loops=True) -> CoherentGraph:
    """Random coherent graph whose coherence is a random part of the simple one."""
    g = random_graph(rng, vertices, n_edges, loops, prefix)
    return CoherentGraph(g, random_relation(rng, g.edges, p, simple_coherence(g).pairs))


def random_matching(rng, vertices) -> Matching:
    vertices = list(vertices)
    rng.shuffle(vertices)
    return Matching.of(zip(vertices[::2], vertices[1::2]))


def random_formula(rng, n):
    if n == 1:
        return leaves_placeholder()
    k = rng.randint(1, n - 1)
    op = rng.choice((Tensor, Par))
    return op(random_formula(rng, k), random_formula(rng, n - k))


def leaves_placeholder():
    from .mll.enumerate import PLACEHOLDER

    return PLACEHOLDER


def _names(prefix, n):
    return [f"{prefix}{i}" for i in range(n)]


# -- provenance flattening ----------------------------------------------------

def flatten(edge_id, shape):
    """Expand a (nested) executed edge id to leaf steps ``(graph_index, edge)``.

    ``shape`` mirrors the execution tree: an int for an input graph, a pair
    ``(left_shape, right_shape)`` for an execution.
    """
    if isinstance(shape, int):
        return ((shape, edge_id),)
    out = ()
    for tag, sub in edge_id:
        out += flatten(sub, shape[tag])
    return out


def _flat_view(g, shape):
    edges = {flatten(e, shape): g.ends[e] for e in g.ends}
    pairs = {frozenset(flatten(x, shape) for x in p) for p in g.coh.pairs}
    return g.vertices, edges, frozenset(pairs)


# -- suites --------------------------------------------------------------------

def _random_triple(rng):
    pool = _names("v", rng.randint(3, 10))
    owners = {}
    for v in pool:
        owners[v] = rng.choice([(0,), (1,), (2,), (0, 1), (1, 2), (0, 2)])
    sets = [[v for v in pool if k in owners[v]][:8] for k in range(3)]
    graphs = []
    for k, vs in enumerate(sets):
        graphs.append(random_coherent_graph(rng, vs, rng.randint(0, 12) if vs else 0,
                                            p=rng.choice((0.3, 0.5, 0.7)), prefix="fgh"[k]))
    return graphs


def associativity_suite(seed=0, cases=1000) -> SuiteResult:
    """Both bracketings of a triple execution, and the direct ternary one, agree."""
    rng = random.Random(seed)
    res = SuiteResult("associativity")
    t0 = time.perf_counter()
    while res.cases < cases:
        f, g, h = _random_triple(rng)
        try:
            left = execute(execute(f, g), h)
            right = execute(f, execute(g, h))
            direct = execute_many(f, g, h)
        except DivergentExecution:
            res.skipped += 1
            continue
        res.cases += 1
        lv = _flat_view(left, ((0, 1), 2))
        rv = _flat_view(right, (0, (1, 2)))
        dv = _flat_view(direct, (0, 1, 2))
        expected_vertices = (f.vertices ^ g.vertices ^ h.vertices) - (f.vertices & g.vertices & h.vertices)
        if not (lv == rv == dv and lv[0] == expected_vertices):
            res.fail((f, g, h))
    res.seconds = time.perf_counter() - t0
    res.notes.append(f"divergent skipped: {res.skipped}")
    return res


def adjunction_suite(seed=0, cases=1000) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("adjunction")
    t0 = time.perf_counter()
    holds = 0
    for _ in range(cases):
        n = rng.randint(2, 8)
        verts = _names("v", n)
        k = rng.randint(1, n - 1)
        vg, vh = verts[:k], verts[k:]
        f = random_coherent_graph(rng, verts, rng.randint(0, 12), rng.choice((0.3, 0.6, 0.9)), prefix="f")
        g = random_coherent_graph(rng, vg, rng.randint(0, 6), rng.choice((0.3, 0.6, 0.9)), prefix="g")
        h = random_coherent_graph(rng, vh, rng.randint(0, 6), rng.choice((0.3, 0.6, 0.9)), prefix="h")
        lhs = orthogonal(f, tensor_graph(g, h))
        rhs = orthogonal(f, tensor_graph(g, CoherentGraph.empty(vh))) and orthogonal(execute(f, g), h)
        res.cases += 1
        holds += lhs
        if lhs != rhs:
            res.fail((f, g, h))
    res.seconds = time.perf_counter() - t0
    res.notes.append(f"orthogonal in {holds}/{res.cases}")
    return res


def simplicity_suite(seed=0, cases=500) -> SuiteResult:
    """Walks of simple graphs are simple; execution stays simple and finite.

    Walk simplicity (and its converse) is checked on loop-free pairs: a
    loop at a boundary vertex is a one-edge walk from the vertex to itself,
    and two loops on one vertex form a coherent 2-cycle, neither of which
    is vertex-simple. Every other case, loops included, checks that
    execution terminates with a simple result.
    """
    rng = random.Random(seed)
    res = SuiteResult("simplicity")
    t0 = time.perf_counter()
    walk_checks = 0
    for _ in range(cases):
        pool = _names("v", rng.randint(2, 7))
        vg = [v for v in pool if rng.random() < 0.75] or pool[:1]
        vh = [v for v in pool if rng.random() < 0.75] or pool[-1:]
        loops = rng.random() < 0.3
        g = random_simple_graph(rng, vg, rng.randint(0, 10), rng.choice((0.5, 0.9, 1.0)), "g", loops)
        h = random_simple_graph(rng, vh, rng.randint(0, 10), rng.choice((0.5, 0.9, 1.0)), "h", loops)
        res.cases += 1
        try:
            ex = execute(g, h)
        except DivergentExecution:
            res.fail(("diverged", g, h))
            continue
        if not (is_simple(g) and is_simple(h) and is_simple(ex)):
            res.fail(("execution not simple", g, h))
            continue
        if loops:
            continue
        walk_checks += 1
        p = plug(g, h)
        boundary = g.vertices ^ h.vertices
        if not all(is_simple_walk(w) for w in coherent_walks(p, boundary)):
            res.fail(("non-simple walk", g, h))
            continue
        if not all(is_simple_walk(c) for c in coherent_cycles(p)):
            res.fail(("non-simple cycle", g, h))
            continue
        # converse: under the simple coherences, simple alternating = coherent
        ps = plug(CoherentGraph.with_coherence(g.graph, "simple"), CoherentGraph.with_coherence(h.graph, "simple"))
        raw = plug(g.graph, h.graph)
        same_walks = ({w.edges for w in coherent_walks(raw, boundary, simple=True)}
                      == {w.edges for w in coherent_walks(ps, boundary)})
        same_cycles = ({c.edges for c in coherent_cycles(raw, simple=True)}
                       == {c.edges for c in coherent_cycles(ps)})
        if not (same_walks and same_cycles):
            res.fail(("converse", g, h))
    res.seconds = time.perf_counter() - t0
    res.notes.append(f"walk checks on loop-free pairs: {walk_checks}")
    return res


def chordless_suite(seed=0, cases=500, literal=False) -> SuiteResult:
    """Coherent cycles under chordless coherences versus brute-force enumeration.

    The oracle counts an edge of one graph as a chord whenever it joins two
    cycle vertices not joined by a cycle edge of that same graph. With
    ``literal`` a chord must join non-consecutive cycle vertices, which
    misses a bridging edge running alongside a cycle edge of the other
    graph; the mismatches this produces are counted as failures.
    """
    rng = random.Random(seed)
    res = SuiteResult("chordless-cycles" + ("-literal" if literal else ""))
    t0 = time.perf_counter()
    total = 0
    for _ in range(cases):
        verts = _names("v", rng.randint(2, 6))
        g = CoherentGraph.with_coherence(random_graph(rng, verts, rng.randint(0, 7), loops=False, prefix="g"),
                                         "chordless")
        h = CoherentGraph.with_coherence(random_graph(rng, verts, rng.randint(0, 7), loops=False, prefix="h"),
                                         "chordless")
        res.cases += 1
        engine = {c.edges for c in coherent_cycles(plug(g, h))}
        brute = brute_simple_chordless_cycles([g, h], own_graph_chords=not literal)
        total += len(engine)
        if engine != brute:
            res.fail((g, h, engine ^ brute))
    res.seconds = time.perf_counter() - t0
    res.notes.append(f"cycles compared: {total}")
    return res


def _bipartite_universe(vg, vh):
    return [(a, b) for a in vg for b in vh] + [(b, a) for a in vg for b in vh]


def simple_adjunction_counterexample(max_vertices=6, max_edges=8):
    """Exhaustive search for ``F ⊥s G⊗H`` with ``F ::s G`` not ``⊥s H``.

    Full coherences throughout. Candidates are visited by increasing
    ``|E(F)| + |E(G)|``, then total vertex count; ``G`` ranges over edge
    sets on its block and ``F`` over edge sets between the blocks that
    touch every vertex (an untouched vertex plays no part in any
    alternating path or cycle, so it is covered by a smaller size). Both
    properties are monotone in ``H``, so ``H`` is taken as the ``H``-edges
    of each simple cycle of ``(F ::s G) □ H_complete``, which covers every
    candidate ``H``. Returns ``(F, G, H, cycle)`` or None.
    """
    for budget in range(2, max_edges + 1):
        for total in range(2, max_vertices + 1):
            for ng in range(1, total):
                found = _search_blocks(_names("g", ng), _names("h", total - ng), budget)
                if found:
                    return found
    return None


def _search_blocks(vg, vh, budget):
    everything = set(vg) | set(vh)
    complete_h = CoherentGraph.build([(f"{a}{b}", a, b) for a in vh for b in vh], vertices=vh)
    g_universe = [(a, b) for a in vg for b in vg]
    f_universe = _bipartite_universe(vg, vh)
    for kf in range(max(2, (len(everything) + 1) // 2), min(budget, len(f_universe)) + 1):
        kg = budget - kf
        if kg > len(g_universe):
            continue
        f_candidates = [fe for fe in combinations(f_universe, kf) if set().union(*fe) == everything]
        for g_edges in combinations(g_universe, kg):
            g = CoherentGraph.build([(f"{a}{b}", a, b) for a, b in g_edges], vertices=vg)
            g_empty_h = tensor_graph(g, CoherentGraph.empty(vh))
            for f_edges in f_candidates:
                f = CoherentGraph.build([(f"{a}{b}", a, b) for a, b in f_edges], vertices=vg + vh)
                if not orthogonal_simple(f, g_empty_h):
                    continue
                fg = execute_simple(f, g)
                if not fg.edges:
                    continue
                for c in _Compiled(plug_coherent(fg, complete_h)).cycles(simple=True):
                    h = complete_h.subgraph([e for tag, e in c.edges if tag == 1])
                    if orthogonal_simple(f, tensor_graph(g, h)):
                        return f, g, h, c
    return None


def simple_adjunction_suite(seed=0, cases=1) -> SuiteResult:
    res = SuiteResult("simple-adjunction-counterexample")
    t0 = time.perf_counter()
    found = simple_adjunction_counterexample()
    res.cases = 1
    if found is None:
        res.fail("no counterexample with <= 6 vertices")
    else:
        f, g, h, _ = found
        ok = (orthogonal_simple(f, tensor_graph(g, h))
              and not orthogonal_simple(execute_simple(f, g), h)
              and not orthogonal(f, tensor_graph(g, h)))
        if not ok:
            res.fail(found)
        res.notes.append(f"|V|={len(f.vertices)} |E(F)|={len(f)} |E(G)|={len(g)} |E(H)|={len(h)}")
    res.seconds = time.perf_counter() - t0
    return res


def _tensor_separated_pairs(formula) -> int:
    """Leaf pairs whose lowest common ancestor is a ⊗."""
    def go(node):
        if not isinstance(node, (Tensor, Par)):
            return 1, 0
        nl, cl = go(node.left)
        nr, cr = go(node.right)
        here = nl * nr if isinstance(node, Tensor) else 0
        return nl + nr, cl + cr + here
    return go(formula)[1]


def check_formula_generator(formula) -> list:
    """Problems with the cograph test of ``formula`` (empty list if none)."""
    problems = []
    g = formula_cograph(formula)
    n = len(g.vertices)
    if g.coh.pairs != brute_chordless_pairs(g):
        problems.append("coherence is not the chordless coherence")
    if not is_principal_generator(g):
        problems.append("parallel edges")
    if len(g.edges) > n * n or len(g.edges) != 2 * _tensor_separated_pairs(formula):
        problems.append("edge count")
    adjacency = {v: set() for v in g.vertices}
    for s, t in g.ends.values():
        adjacency[s].add(t)
        adjacency[t].add(s)
        if (t, s) not in g.ends:
            problems.append("not symmetric")
    if induced_p4(adjacency) is not None:
        problems.append("induced P4")
    return problems


def generators_suite(seed=0, cases=None, max_leaves=10, all_shapes_up_to=6) -> SuiteResult:
    """Every cograph formula up to ``max_leaves`` leaves, and every binary
    formula (all bracketings) up to ``all_shapes_up_to`` leaves."""
    res = SuiteResult("formula-generators")
    t0 = time.perf_counter()
    for n in range(1, max_leaves + 1):
        formulas = list(cograph_formulas(n))
        if n <= all_shapes_up_to:
            formulas += list(binary_formulas(n))
        for f in formulas:
            res.cases += 1
            problems = check_formula_generator(f)
            if problems:
                res.fail((str(f), problems))
    if cases:
        rng = random.Random(seed)
        for _ in range(cases):
            f = random_formula(rng, rng.randint(1, max_leaves))
            res.cases += 1
            problems = check_formula_generator(f)
            if problems:
                res.fail((str(f), problems))
    res.seconds = time.perf_counter() - t0
    return res


def quotient_suite(seed=0, cases=500) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("sum-quotient")
    t0 = time.perf_counter()
    for _ in range(cases):
        verts = _names("v", rng.randint(1, 5))
        a, b, c = (random_coherent_graph(rng, verts, rng.randint(0, 5), rng.choice((0.2, 0.5, 0.8)), prefix=p)
                   for p in "abc")
        f = random_coherent_graph(rng, verts, rng.randint(0, 6), rng.choice((0.3, 0.7, 1.0)), prefix="f")
        res.cases += 1
        ca = canonical_form(a)
        blocks = {frozenset(cl) for cl in maximal_cliques(ca.coh) if cl}
        expected_blocks = {frozenset(e for e in ca.edges if e[0] == i) for i in {e[0] for e in ca.edges}}
        checks = [
            equiv_R(a, a),
            equiv_R(ca, a) and equiv_R(a, ca),
            equiv_R(canonical_form(ca), ca),
            blocks == expected_blocks,
            equiv_R(boxplus(boxplus(a, b), c), boxplus(a, boxplus(b, c))),
            equiv_R(boxplus(a, b), boxplus(b, a)),
            orthogonal(f, boxplus(a, b)) == (orthogonal(f, a) and orthogonal(f, b)),
            orthogonal(f, ca) == orthogonal(f, a),
        ]
        if not all(checks):
            res.fail((checks, a, b, c, f))
    res.seconds = time.perf_counter() - t0
    return res


def _random_member(rng, test, attempts=30):
    verts = sorted(test.vertices)
    for _ in range(attempts):
        x = random_coherent_graph(rng, verts, rng.randint(0, 2 * len(verts)), rng.choice((0.3, 0.7, 1.0)),
                                  prefix="x")
        if orthogonal(x, test):
            return x
    return None


def mix_suite(seed=0, cases=200) -> SuiteResult:
    """Members of A and B give members of A ⊗ B and of A ⅋ B."""
    rng = random.Random(seed)
    res = SuiteResult("mix-inclusion")
    t0 = time.perf_counter()
    par_side = 0
    while res.cases < cases:
        va = _names("a", rng.randint(1, 4))
        vb = _names("b", rng.randint(1, 4))
        ta = random_coherent_graph(rng, va, rng.randint(0, 5), rng.choice((0.3, 0.7)), prefix="s")
        tb = random_coherent_graph(rng, vb, rng.randint(0, 5), rng.choice((0.3, 0.7)), prefix="t")
        x, y = _random_member(rng, ta), _random_member(rng, tb)
        if x is None or y is None:
            res.skipped += 1
            continue
        res.cases += 1
        xy = tensor_graph(x, y)
        if not orthogonal(xy, tensor_graph(ta, tb)):
            res.fail(("mix", x, y, ta, tb))
        elif not orthogonal(xy, par_graph(ta, tb)):
            res.fail(("tensor", x, y, ta, tb))
        # decomposable members of the par conduct pass block-wise
        u = random_coherent_graph(rng, va, rng.randint(0, 4), 0.5, prefix="u")
        w = random_coherent_graph(rng, vb, rng.randint(0, 4), 0.5, prefix="w")
        if orthogonal(tensor_graph(u, w), tensor_graph(ta, tb)):
            par_side += 1
            if not (orthogonal(u, ta) and orthogonal(w, tb)):
                res.fail(("par", u, w, ta, tb))
    res.seconds = time.perf_counter() - t0
    res.notes.append(f"par-side samples: {par_side}")
    return res


def identity_cut_suite(seed=0, cases=200) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("identity-cut")
    t0 = time.perf_counter()
    for _ in range(cases):
        verts = _names("v", 2 * rng.randint(1, 6))
        m = random_matching(rng, verts)
        copy = {v: ("c", v) for v in verts}
        ident = Matching.of((v, copy[v]) for v in verts)
        res.cases += 1
        out = cut_eliminate(m, ident, frozenset(verts))
        via_exec = execute(m.as_graph(), ident.as_graph())
        expected = m.rename(copy)
        if out != expected or Matching.from_graph(via_exec) != expected:
            res.fail((m, out))
        if not graphs_equiv(via_exec, rename_vertices(m.as_graph().graph, copy)):
            res.fail(("graph", m))
    res.seconds = time.perf_counter() - t0
    return res


def correct_matchings(formula) -> list:
    n = len(leaves(formula))
    out = []
    for pairs in all_perfect_matchings(range(n)):
        f = relabel(formula, labels_for(n, pairs))
        if check_correctness(build_proof(f, pairs)):
            out.append(pairs)
    return out


def cut_soundness_suite(seed=0, cases=None, max_leaves=8) -> SuiteResult:
    """Cut two correct nets ``⊢ Γ, F`` and ``⊢ F^⊥, Δ`` and check the result.

    All cograph shapes for Γ, F, Δ with ``|Γ| + 2|F| + |Δ| <= max_leaves``
    (Γ or Δ possibly empty, a sequent being read as the ⅋ of its
    formulas) and all correct link sets on both sides. Atoms are one per component of
    the combined link graph, which always types the cut.
    """
    res = SuiteResult("cut-soundness")
    t0 = time.perf_counter()
    shapes = {n: cograph_formulas(n) for n in range(1, max_leaves)}
    correct_cache = {}

    def correct(f):
        if f not in correct_cache:
            correct_cache[f] = correct_matchings(f)
        return correct_cache[f]

    shapes[0] = [None]
    cycles = 0
    for nf in range(1, max_leaves // 2 + 1):
        for ng in range(0, max_leaves - 2 * nf + 1):
            for nd in range(0, max_leaves - 2 * nf - ng + 1):
                if (ng + nf) % 2 or (nf + nd) % 2 or ng + nd == 0:
                    continue
                for gam in shapes[ng]:
                    for fo in shapes[nf]:
                        left = _join(gam, fo)
                        for dl in shapes[nd]:
                            right = _join(dual(fo), dl)
                            target = _join(gam, dl)
                            for m1 in correct(left):
                                for m2 in correct(right):
                                    res.cases += 1
                                    ok, cyc = _cut_case(m1, m2, ng, nf, nd, target)
                                    cycles += cyc
                                    if not ok:
                                        res.fail((str(left), m1, str(right), m2))
    res.seconds = time.perf_counter() - t0
    res.notes.append(f"cuts meeting a cycle: {cycles}")
    return res


def _join(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return Par(a, b)


def _cut_case(m1, m2, ng, nf, nd, target):
    def loc1(i):
        return ("g", i) if i < ng else ("f", i - ng)

    def loc2(i):
        return ("f", i) if i < nf else ("d", i - nf)

    a = Matching.of((loc1(i), loc1(j)) for i, j in m1)
    b = Matching.of((loc2(i), loc2(j)) for i, j in m2)
    shared = frozenset(("f", k) for k in range(nf))
    try:
        out = cut_eliminate(a, b, shared)
    except CycleError:
        return False, 1
    index = {("g", i): i for i in range(ng)}
    index.update({("d", k): ng + k for k in range(nd)})
    pairs = [tuple(index[v] for v in p) for p in out.pairs]
    f = relabel(target, labels_for(ng + nd, pairs))
    return bool(check_correctness(build_proof(f, pairs))), 0


def correctness_cases(max_leaves=8, all_shapes_up_to=6):
    """Yield (formula, pairs) for the exhaustive correctness/oracle agreement check."""
    for n in range(2, max_leaves + 1, 2):
        formulas = list(binary_formulas(n)) if n <= all_shapes_up_to else list(cograph_formulas(n))
        matchings = all_perfect_matchings(range(n))
        for shape in formulas:
            for pairs in matchings:
                yield relabel(shape, labels_for(n, pairs)), pairs


def correctness_suite(seed=0, cases=None, max_leaves=8, all_shapes_up_to=6) -> SuiteResult:
    """Graph criterion versus sequent search, exhaustively.

    Up to ``all_shapes_up_to`` leaves every bracketing is enumerated; above,
    one formula per cograph (formulas modulo associativity/commutativity),
    each with every perfect matching of its leaves.
    """
    res = SuiteResult("correctness-vs-sequent")
    t0 = time.perf_counter()
    correct = 0
    for f, pairs in correctness_cases(max_leaves, all_shapes_up_to):
        res.cases += 1
        verdict = check_correctness(build_proof(f, pairs))
        if bool(verdict) != sequent_oracle(f, pairs, mix=True):
            res.fail((str(f), pairs))
        correct += bool(verdict)
    res.seconds = time.perf_counter() - t0
    res.notes.append(f"correct nets: {correct}")
    return res


def matching_suite(seed=0, cases=200) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("matching-encoding")
    t0 = time.perf_counter()
    for _ in range(cases):
        m = random_matching(rng, _names("v", 2 * rng.randint(1, 6)))
        g = m.as_graph()
        res.cases += 1
        if not (is_simple(g) and g.coh == simple_coherence(g.graph) == chordless_coherence(g.graph)):
            res.fail(m)
    res.seconds = time.perf_counter() - t0
    return res


SUITES = {
    "associativity": associativity_suite,
    "adjunction": adjunction_suite,
    "simplicity": simplicity_suite,
    "chordless": chordless_suite,
    "quotient": quotient_suite,
    "mix": mix_suite,
    "identity-cut": identity_cut_suite,
    "matching": matching_suite,
}


def run_selftest(seed=0, cases=200, include_exhaustive=False):
    results = [suite(seed=seed, cases=cases) for suite in SUITES.values()]
    if include_exhaustive:
        results += [generators_suite(), correctness_suite(), cut_soundness_suite(), simple_adjunction_suite()]
    return results


def format_table(results) -> str:
    # no timings: the table must be byte-identical across runs
    rows = [("suite", "cases", "failures", "skipped", "status")]
    for r in results:
        rows.append((r.name, str(r.cases), str(r.failures), str(r.skipped), "PASS" if r.ok else "FAIL"))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)
