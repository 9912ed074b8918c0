"""Exhaustive enumeration of formula shapes for desk-scale checks.

Two families are produced:

* :func:`binary_formulas` -- every binary tree with every connective labelling;
* :func:`cograph_formulas` -- one formula per cograph up to isomorphism, i.e.
  formulas modulo associativity and commutativity of ⊗ and ⅋.

Leaves carry the placeholder atom ``X``; callers relabel them from a matching.
"""
from __future__ import annotations

from functools import lru_cache

from .formula import Atom, Par, Tensor

PLACEHOLDER = Atom("X")


@lru_cache(maxsize=None)
def binary_formulas(n: int) -> tuple:
    if n == 1:
        return (PLACEHOLDER,)
    out = []
    for k in range(1, n):
        for left in binary_formulas(k):
            for right in binary_formulas(n - k):
                out.append(Tensor(left, right))
                out.append(Par(left, right))
    return tuple(out)


# A cotree is "leaf" or (kind, children) with children a sorted tuple of
# cotrees whose roots differ from kind.

def _order(tree):
    if tree == "leaf":
        return (1, "")
    kind, children = tree
    return (_size(tree), kind, tuple(_order(c) for c in children))


@lru_cache(maxsize=None)
def _size(tree) -> int:
    if tree == "leaf":
        return 1
    return sum(_size(c) for c in tree[1])


@lru_cache(maxsize=None)
def cotrees(n: int, exclude: str | None = None) -> tuple:
    """Canonical cotrees on ``n`` unlabelled leaves whose root kind is not ``exclude``."""
    if n == 1:
        return ("leaf",)
    out = []
    for kind in ("par", "tensor"):
        if kind == exclude:
            continue
        candidates = sorted((t for k in range(1, n) for t in cotrees(k, kind)), key=_order)
        out.extend((kind, children) for children in _multisets(candidates, n, 0))
    return tuple(out)


def _multisets(candidates, total, start):
    """Non-decreasing tuples (length >= 2) of candidates with sizes summing to total."""
    results = []

    def go(i, remaining, chosen):
        if remaining == 0:
            if len(chosen) >= 2:
                results.append(tuple(chosen))
            return
        for j in range(i, len(candidates)):
            s = _size(candidates[j])
            if s > remaining or (not chosen and s == total):
                continue
            chosen.append(candidates[j])
            go(j, remaining - s, chosen)
            chosen.pop()

    go(start, total, [])
    return results


def cotree_formula(tree):
    if tree == "leaf":
        return PLACEHOLDER
    kind, children = tree
    op = Par if kind == "par" else Tensor
    node = cotree_formula(children[0])
    for c in children[1:]:
        node = op(node, cotree_formula(c))
    return node


def cograph_formulas(n: int) -> list:
    return [cotree_formula(t) for t in cotrees(n)]
