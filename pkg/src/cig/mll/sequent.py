"""Brute-force sequent-calculus search with the axiom links fixed in advance.

This is deliberately unrelated to the graph machinery: it answers whether
the given links are the axioms of some derivation of ``⊢ F`` built from
axiom, ⅋, ⊗ (every context split) and optionally binary Mix.
"""
from __future__ import annotations

from .formula import Atom, Formula, Par, leaves
from .proofnet import build_proof


def _flatten(f: Formula):
    """Number subformula occurrences; return kinds, children and leaf masks."""
    kinds, children, masks = [], [], []
    leaf_counter = [0]

    def go(node):
        idx = len(kinds)
        kinds.append(None)
        children.append(None)
        masks.append(0)
        if isinstance(node, Atom):
            kinds[idx] = "leaf"
            children[idx] = leaf_counter[0]
            masks[idx] = 1 << leaf_counter[0]
            leaf_counter[0] += 1
        else:
            kinds[idx] = "par" if isinstance(node, Par) else "tensor"
            left = go(node.left)
            right = go(node.right)
            children[idx] = (left, right)
            masks[idx] = masks[left] | masks[right]
        return idx

    go(f)
    return kinds, children, masks


def _splits(items):
    """All ordered 2-partitions of ``items`` (either side may be empty)."""
    n = len(items)
    for bits in range(1 << n):
        yield ([x for k, x in enumerate(items) if bits >> k & 1],
               [x for k, x in enumerate(items) if not bits >> k & 1])


def sequent_oracle(f: Formula, pairs, mix: bool = True) -> bool:
    """True iff ``⊢ f`` has a derivation whose axioms are exactly ``pairs``."""
    build_proof(f, pairs)
    kinds, children, masks = _flatten(f)
    partner = {}
    for i, j in pairs:
        partner[i], partner[j] = j, i
    closure = {}
    for node, m in enumerate(masks):
        c = 0
        for k in range(len(leaves(f))):
            if m >> k & 1:
                c |= 1 << partner[k]
        closure[node] = c

    def leaf_mask(seq):
        m = 0
        for node in seq:
            m |= masks[node]
        return m

    def closed(seq):
        m = leaf_mask(seq)
        c = 0
        for node in seq:
            c |= closure[node]
        return c == m

    memo = {}

    def prove(seq: frozenset) -> bool:
        if seq in memo:
            return memo[seq]
        memo[seq] = False
        result = _prove(seq)
        memo[seq] = result
        return result

    def _prove(seq):
        if not seq or not closed(seq):
            return False
        if len(seq) == 2:
            a, b = sorted(seq)
            if kinds[a] == kinds[b] == "leaf" and partner[children[a]] == children[b]:
                return True
        for node in sorted(seq):
            if kinds[node] == "par":
                left, right = children[node]
                if prove(seq - {node} | {left, right}):
                    return True
        for node in sorted(seq):
            if kinds[node] == "tensor":
                left, right = children[node]
                rest = sorted(seq - {node})
                for gamma, delta in _splits(rest):
                    if prove(frozenset(gamma) | {left}) and prove(frozenset(delta) | {right}):
                        return True
        if mix and len(seq) >= 2:
            first, *others = sorted(seq)
            for gamma, delta in _splits(others):
                if delta and prove(frozenset(gamma) | {first}) and prove(frozenset(delta)):
                    return True
        return False

    return prove(frozenset({0}))
