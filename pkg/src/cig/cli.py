"""Command-line interface.

Exit codes: 0 success / Correct / orthogonal, 1 Incorrect / not orthogonal,
2 bad input, 3 divergent execution.
"""
from __future__ import annotations

import argparse
import contextlib
import sys

from . import __version__
from .conducts import canonical_form
from .errors import CigError, CycleError, DivergentExecution
from .execution import (
    cycle_witness,
    execute,
    execute_simple,
    has_chord,
    is_simple_walk,
    plug_coherent,
    validate_walk,
)
from .graph import plug, rename_vertices
from .io import format_cig, read_cig, to_dot, write_cig
from .mll.formula import leaves, parse_formula, to_text
from .mll.proofnet import Matching, build_proof, check_correctness, cut_eliminate, formula_cograph
from .mll.sequent import sequent_oracle

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DIVERGENT = 0, 1, 2, 3


class InputError(CigError):
    pass


def parse_links(text: str) -> list:
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            a, b = chunk.split("-")
            pairs.append((int(a), int(b)))
        except ValueError:
            raise InputError(f"bad link {chunk!r}; expected i-j") from None
    return pairs


def parse_map(text: str) -> dict:
    mapping = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if chunk.count("=") != 1:
            raise InputError(f"bad mapping {chunk!r}; expected old=new")
        old, new = chunk.split("=")
        mapping[old.strip()] = new.strip()
    return mapping


def _check_witness(p, walk, chordless=False):
    # a witness we cannot re-validate is a bug, not a verdict
    if not validate_walk(p, walk) or (chordless and has_chord(p, walk)):
        raise AssertionError(f"internal error: witness {walk} does not re-validate")


def cmd_check(args, out):
    f = parse_formula(args.formula)
    pairs = parse_links(args.links)
    proof = build_proof(f, pairs)
    verdict = check_correctness(proof)
    out.write(f"formula: {to_text(f)}\n")
    out.write(f"links: {Matching.of(pairs)}\n")
    out.write(f"{verdict}\n")
    if verdict.witness is not None:
        _check_witness(plug_coherent(proof.cograph, proof.links.as_graph()), verdict.witness, chordless=True)
        out.write(f"witness ({len(verdict.witness)} edges): {verdict.witness}\n")
    if args.oracle:
        provable = sequent_oracle(f, pairs, mix=not args.no_mix)
        system = "MLL+Mix" if not args.no_mix else "MLL"
        agree = provable == bool(verdict)
        out.write(f"oracle ({system}): {'provable' if provable else 'not provable'}; "
                  f"{'agrees' if agree else 'disagrees'}\n")
    return EXIT_OK if verdict else EXIT_FAIL


def cmd_cograph(args, out):
    f = parse_formula(args.formula)
    g = formula_cograph(f)
    if args.dot:
        labels = {i: str(a) for i, a in enumerate(leaves(f))}
        out.write(to_dot(g, labels=labels))
    else:
        out.write(format_cig(g))
    return EXIT_OK


def cmd_orth(args, out):
    g, h = read_cig(args.g1), read_cig(args.g2)
    witness = cycle_witness(g, h, simple=args.simple)
    if witness is None:
        out.write("orthogonal\n")
        return EXIT_OK
    if args.simple:
        _check_witness(plug(g.graph, h.graph), witness)
        assert is_simple_walk(witness), "internal error: witness is not simple"
    else:
        _check_witness(plug_coherent(g, h), witness)
    out.write("not orthogonal\n")
    out.write(f"witness ({len(witness)} edges): {witness}\n")
    return EXIT_FAIL


def _emit(g, path, out):
    if path:
        write_cig(g, path)
    else:
        out.write(format_cig(g))


def cmd_exec(args, out):
    g, h = read_cig(args.g1), read_cig(args.g2)
    result = (execute_simple if args.simple else execute)(g, h)
    _emit(result, args.output, out)
    return EXIT_OK


def cmd_cut(args, out):
    m1 = Matching.from_graph(read_cig(args.g1))
    m2 = Matching.from_graph(read_cig(args.g2))
    shared = frozenset(v.strip() for v in args.shared.split(",") if v.strip())
    result = cut_eliminate(m1, m2, shared)
    _emit(result.as_graph(), args.output, out)
    return EXIT_OK


def cmd_normalize(args, out):
    _emit(canonical_form(read_cig(args.g)), args.output, out)
    return EXIT_OK


def cmd_rename(args, out):
    g = read_cig(args.g)
    mapping = parse_map(args.map)
    unknown = sorted(set(mapping) - g.vertices)
    if unknown:
        raise InputError(f"unknown vertices in map: {', '.join(unknown)}")
    full = {v: mapping.get(v, v) for v in g.vertices}
    renamed = type(g)(rename_vertices(g.graph, full), g.coh)
    _emit(renamed, args.output, out)
    return EXIT_OK


def cmd_selftest(args, out):
    from .selftest import format_table, run_selftest

    results = run_selftest(seed=args.seed, cases=args.cases, include_exhaustive=args.exhaustive)
    out.write(format_table(results) + "\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cig", description="Coherent interaction graphs and cographic proof nets.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check correctness of a cographic proof")
    p.add_argument("formula")
    p.add_argument("--links", required=True, help="axiom links as i-j,k-l over leaf indices")
    p.add_argument("--oracle", action="store_true", help="also run the sequent-calculus search")
    p.add_argument("--no-mix", action="store_true", help="oracle without the Mix rule")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cograph", help="print the cograph of a formula")
    p.add_argument("formula")
    p.add_argument("--dot", action="store_true", help="DOT output instead of .cig")
    p.set_defaults(func=cmd_cograph)

    p = sub.add_parser("orth", help="test orthogonality of two graphs on the same vertices")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--simple", action="store_true", help="simple cycles only, ignoring coherence")
    p.set_defaults(func=cmd_orth)

    p = sub.add_parser("exec", help="execute two graphs")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("-o", "--output")
    p.add_argument("--simple", action="store_true", help="simple paths only, ignoring coherence")
    p.set_defaults(func=cmd_exec)

    p = sub.add_parser("cut", help="compose two matchings along shared vertices")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--shared", required=True, help="comma-separated shared vertices")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("normalize", help="replace a graph by the sum of its maximal cliques")
    p.add_argument("g")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("rename", help="rename vertices")
    p.add_argument("g")
    p.add_argument("--map", required=True, help="old=new,... (unlisted vertices keep their name)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_rename)

    p = sub.add_parser("selftest", help="run the seeded property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--exhaustive", action="store_true", help="also run the exhaustive enumerations (slow)")
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args, out)
    except DivergentExecution as exc:
        err.write(f"divergent execution: {exc}\n")
        return EXIT_DIVERGENT
    except CycleError as exc:
        err.write(f"cut meets a cycle: {exc}\n")
        if exc.cycle is not None:
            out.write(f"cycle: {exc.cycle}\n")
        return EXIT_FAIL
    except (CigError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
