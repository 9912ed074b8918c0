"""Unit-free MLL formulas in negation normal form, and their parser.

Grammar (``*`` binds tighter than ``|``, both left-associative)::

    par     := tensor ('|' tensor)*
    tensor  := postfix ('*' postfix)*
    postfix := primary '^'*
    primary := IDENT | '(' par ')'

A ``^`` on a compound subformula is pushed to the atoms by De Morgan.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ..errors import FormulaSyntaxError


@dataclass(frozen=True)
class Atom:
    name: str
    positive: bool = True

    def dual(self) -> Atom:
        return Atom(self.name, not self.positive)

    def is_dual_of(self, other: Atom) -> bool:
        return self.name == other.name and self.positive != other.positive

    def __str__(self):
        return self.name if self.positive else self.name + "^"


@dataclass(frozen=True)
class Tensor:
    left: Formula
    right: Formula

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Par:
    left: Formula
    right: Formula

    def __str__(self):
        return to_text(self)


Formula = Union[Atom, Tensor, Par]


def dual(f: Formula) -> Formula:
    """De Morgan dual; leaf order is preserved."""
    if isinstance(f, Atom):
        return f.dual()
    if isinstance(f, Tensor):
        return Par(dual(f.left), dual(f.right))
    return Tensor(dual(f.left), dual(f.right))


def leaves(f: Formula) -> list:
    """Atom occurrences in left-to-right order; the index is the position."""
    out = []
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            out.append(node)
        else:
            stack.append(node.right)
            stack.append(node.left)
    return out


def size(f: Formula) -> int:
    return len(leaves(f))


def relabel(f: Formula, labels) -> Formula:
    """Replace the leaves, in order, by the atoms in ``labels``."""
    it = iter(labels)

    def go(node):
        if isinstance(node, Atom):
            return next(it)
        return type(node)(go(node.left), go(node.right))

    out = go(f)
    if next(it, None) is not None:
        raise ValueError("more labels than leaves")
    return out


_PREC = {Par: 0, Tensor: 1}
_SYMBOL = {Par: " | ", Tensor: " * "}


def to_text(f: Formula) -> str:
    """Shortest text that parses back to ``f``."""
    if isinstance(f, Atom):
        return str(f)
    cls = type(f)

    def wrap(child, right):
        text = to_text(child)
        if isinstance(child, Atom):
            return text
        if _PREC[type(child)] < _PREC[cls] or (right and type(child) is cls):
            return f"({text})"
        return text

    return wrap(f.left, False) + _SYMBOL[cls] + wrap(f.right, True)


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_ALIASES = {"⊗": "*", "⅋": "|", "⊥": "^"}


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _IDENT.match(text, pos)
        if m:
            tokens.append(("ident", m.group(0), pos))
            pos = m.end()
            continue
        ch = _ALIASES.get(text[pos], text[pos])
        if ch not in "^*|()":
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((ch, ch, pos))
        pos += 1
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise FormulaSyntaxError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def par(self):
        node = self.tensor()
        while self.peek()[0] == "|":
            self.i += 1
            node = Par(node, self.tensor())
        return node

    def tensor(self):
        node = self.postfix()
        while self.peek()[0] == "*":
            self.i += 1
            node = Tensor(node, self.postfix())
        return node

    def postfix(self):
        node = self.primary()
        while self.peek()[0] == "^":
            self.i += 1
            node = dual(node)
        return node

    def primary(self):
        kind, value, pos = self.peek()
        if kind == "ident":
            self.i += 1
            return Atom(value)
        if kind == "(":
            self.i += 1
            node = self.par()
            self.take(")")
            return node
        what = "end of input" if kind == "end" else repr(value)
        raise FormulaSyntaxError(f"expected an atom or '(', found {what}", pos)


def parse_formula(text: str) -> Formula:
    """Parse ``text`` into a formula in negation normal form."""
    p = _Parser(text)
    node = p.par()
    p.take("end")
    return node
