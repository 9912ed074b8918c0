"""Acceptance suite: one test and one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` (the lines are printed to the
terminal either way). Criterion 5 is a strict xfail: the literal statement it
checks is false, and the counterexample below shows why.
"""
import pytest

from cig import CoherentGraph
from cig.execution import coherent_cycles
from cig.graph import plug
from cig.oracles import brute_simple_chordless_cycles
from cig.selftest import (
    adjunction_suite,
    associativity_suite,
    chordless_suite,
    correctness_suite,
    cut_soundness_suite,
    generators_suite,
    identity_cut_suite,
    mix_suite,
    quotient_suite,
    simple_adjunction_suite,
    simplicity_suite,
)

SEED = 0


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, *results, extra=""):
        parts = [f"{r.name}: {r.cases} cases, {r.failures} failures"
                 + (f", {r.skipped} skipped" if r.skipped else "")
                 + f", {r.seconds:.1f}s" for r in results]
        notes = [n for r in results for n in r.notes]
        line = f"criterion {number:2d} [{'PASS' if ok else 'FAIL'}] {title}: " + "; ".join(parts)
        if notes:
            line += " (" + "; ".join(notes) + ")"
        if extra:
            line += " " + extra
        with capsys.disabled():
            print("\n" + line)
    return emit


def test_criterion_01_correctness_matches_sequent_search(report):
    r = correctness_suite()
    ok = r.ok and r.cases > 0 and r.seconds <= 300
    report(1, "graph criterion agrees with MLL+Mix proof search up to 8 leaves", ok, r)
    assert ok, r.first_failure


def test_criterion_02_associativity(report):
    r = associativity_suite(seed=SEED, cases=1000)
    ok = r.ok and r.cases >= 1000
    report(2, "execution is associative", ok, r)
    assert ok, r.first_failure


def test_criterion_03_adjunction(report):
    r = adjunction_suite(seed=SEED, cases=1000)
    ok = r.ok and r.cases >= 1000
    report(3, "orthogonality/execution adjunction", ok, r)
    assert ok, r.first_failure


def test_criterion_04_simplicity(report):
    r = simplicity_suite(seed=SEED, cases=500)
    ok = r.ok and r.cases >= 500
    report(4, "simple graphs execute simply", ok, r)
    assert ok, r.first_failure


def bridged_four_cycle():
    # g3 runs alongside h1 and bridges g1 and g2
    g = CoherentGraph.build([("g1", "v", "w"), ("g2", "x", "u"), ("g3", "u", "v")], coherence="chordless")
    h = CoherentGraph.build([("h1", "u", "v"), ("h2", "w", "x")], coherence="chordless")
    return g, h


@pytest.mark.xfail(strict=True, reason="a chord joining non-consecutive cycle vertices misses a bridging edge "
                                        "that runs alongside a cycle edge of the other graph")
def test_criterion_05_coherent_cycles_are_chordless_cycles(report):
    literal = chordless_suite(seed=SEED, cases=2000, literal=True)
    corrected = chordless_suite(seed=SEED, cases=2000, literal=False)
    g, h = bridged_four_cycle()
    engine = {c.edges for c in coherent_cycles(plug(g, h))}
    literal_cycles = brute_simple_chordless_cycles([g, h])
    explicit_ok = engine == literal_cycles
    ok = literal.ok and explicit_ok
    extra = (f"explicit bridged 4-cycle: engine {len(engine)} cycles, literal enumeration "
             f"{len(literal_cycles)}; the corrected chord notion matches on every case")
    report(5, "coherent cycles equal simple chordless cycles (literal)", ok, literal, corrected, extra=extra)
    assert corrected.ok, corrected.first_failure
    assert ok, literal.first_failure


def test_criterion_06_simple_path_adjunction_fails(report):
    r = simple_adjunction_suite()
    report(6, "counterexample to the simple-path adjunction within 6 vertices", r.ok, r)
    assert r.ok, r.first_failure


def test_criterion_07_formula_generators(report):
    r = generators_suite(max_leaves=10)
    ok = r.ok and r.cases > 0
    report(7, "formula cographs are chordless, sparse and P4-free up to 10 leaves", ok, r)
    assert ok, r.first_failure


def test_criterion_08_sum_quotient(report):
    r = quotient_suite(seed=SEED, cases=500)
    ok = r.ok and r.cases >= 500
    report(8, "canonical form and sums up to clique equivalence", ok, r)
    assert ok, r.first_failure


def test_criterion_09_mix_inclusion(report):
    r = mix_suite(seed=SEED, cases=200)
    ok = r.ok and r.cases >= 200
    report(9, "tensor members pass the par test", ok, r)
    assert ok, r.first_failure


def test_criterion_10_cut_elimination(report):
    ident = identity_cut_suite(seed=SEED, cases=200)
    sound = cut_soundness_suite(max_leaves=8)
    ok = ident.ok and ident.cases >= 200 and sound.ok and sound.cases > 0
    report(10, "identity cut and cut soundness up to 8 leaves", ok, ident, sound)
    assert ok, ident.first_failure or sound.first_failure
