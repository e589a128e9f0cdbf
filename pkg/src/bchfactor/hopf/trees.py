"""Rooted trees, forests and the Connes-Kreimer coproduct.

A tree is the tuple of its root's subtrees in canonical order, so the single
vertex is ``()``.  A forest is a canonically sorted tuple of trees; the empty
forest ``()`` is the unit.  Trees never appear on their own as dictionary
keys: values and coproduct terms are always keyed by forests.

Text form: ``*`` is a vertex, ``*[t1 t2 ...]`` grafts subtrees onto a root,
and a forest is whitespace-joined trees (``1`` is the empty forest).
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable

Tree = tuple
Forest = tuple
EMPTY: Forest = ()
VERTEX: Tree = ()


@lru_cache(maxsize=None)
def tree_degree(t: Tree) -> int:
    return 1 + sum(tree_degree(c) for c in t)


def forest_degree(f: Forest) -> int:
    return sum(tree_degree(t) for t in f)


@lru_cache(maxsize=None)
def tree_key(t: Tree):
    """Total order: by vertex count, then recursively by children."""
    return (tree_degree(t), tuple(tree_key(c) for c in t))


def forest_key(f: Forest):
    return (forest_degree(f), len(f), tuple(tree_key(t) for t in f))


def make_tree(children: Iterable[Tree]) -> Tree:
    """Graft (B+) a multiset of trees onto a new root."""
    return tuple(sorted(children, key=tree_key))


def make_forest(trees: Iterable[Tree]) -> Forest:
    return tuple(sorted(trees, key=tree_key))


def merge(f: Forest, g: Forest) -> Forest:
    """Disjoint union (the commutative product)."""
    if not f:
        return g
    if not g:
        return f
    return make_forest(f + g)


@lru_cache(maxsize=None)
def trees_of_degree(n: int) -> tuple[Tree, ...]:
    """All trees with exactly ``n`` vertices (1, 1, 2, 4, 9, 20, ...)."""
    if n < 1:
        return ()
    return tuple(sorted({make_tree(f) for f in forests_of_degree(n - 1)}, key=tree_key))


@lru_cache(maxsize=None)
def forests_of_degree(n: int) -> tuple[Forest, ...]:
    if n == 0:
        return (EMPTY,)
    out = set()
    # choose the tree containing the "first" vertex, recurse on the rest
    for k in range(1, n + 1):
        for t in trees_of_degree(k):
            for rest in forests_of_degree(n - k):
                out.add(merge((t,), rest))
    return tuple(sorted(out, key=forest_key))


def trees_up_to(max_degree: int) -> list[Tree]:
    return [t for n in range(1, max_degree + 1) for t in trees_of_degree(n)]


def forests_up_to(max_degree: int) -> list[Forest]:
    return [f for n in range(0, max_degree + 1) for f in forests_of_degree(n)]


# -- coproduct ------------------------------------------------------------------------

@lru_cache(maxsize=None)
def tree_coproduct(t: Tree) -> tuple[tuple[Forest, Forest, int], ...]:
    """``Delta(B+(F)) = B+(F) x 1 + (id x B+) Delta(F)``: pruned part left, trunk right."""
    terms = Counter({((t,), EMPTY): 1})
    for left, right, m in forest_coproduct(t):
        terms[(left, (make_tree(right),))] += m
    return tuple((l, r, m) for (l, r), m in sorted(terms.items(), key=_term_key))


@lru_cache(maxsize=None)
def forest_coproduct(f: Forest) -> tuple[tuple[Forest, Forest, int], ...]:
    """Multiplicative extension to forests; ``Delta(1) = 1 x 1``."""
    terms = Counter({(EMPTY, EMPTY): 1})
    for t in f:
        nxt = Counter()
        for (l1, r1), m1 in terms.items():
            for l2, r2, m2 in tree_coproduct(t):
                nxt[(merge(l1, l2), merge(r1, r2))] += m1 * m2
        terms = nxt
    return tuple((l, r, m) for (l, r), m in sorted(terms.items(), key=_term_key))


def _term_key(item):
    (l, r), _ = item
    return (forest_key(l), forest_key(r))


# -- text form -------------------------------------------------------------------------

def format_tree(t: Tree) -> str:
    if not t:
        return "*"
    return "*[" + " ".join(format_tree(c) for c in t) + "]"


def format_forest(f: Forest) -> str:
    if not f:
        return "1"
    return " ".join(format_tree(t) for t in f)


def parse_forest(text: str) -> Forest:
    """Read ``"* *[* *[*]]"``-style text; ``"1"`` or ``""`` is the empty forest."""
    s = text.replace(" ", " ").strip()
    if s in ("", "1"):
        return EMPTY
    pos = 0

    def skip():
        nonlocal pos
        while pos < len(s) and s[pos].isspace():
            pos += 1

    def tree():
        nonlocal pos
        skip()
        if pos >= len(s) or s[pos] != "*":
            raise ValueError(f"expected '*' at position {pos} in {text!r}")
        pos += 1
        children = []
        if pos < len(s) and s[pos] == "[":
            pos += 1
            while True:
                skip()
                if pos < len(s) and s[pos] == "]":
                    pos += 1
                    break
                children.append(tree())
        return make_tree(children)

    trees = []
    while True:
        skip()
        if pos >= len(s):
            break
        trees.append(tree())
    return make_forest(trees)


def parse_tree(text: str) -> Tree:
    f = parse_forest(text)
    if len(f) != 1:
        raise ValueError(f"{text!r} is not a single tree")
    return f[0]


# -- antipode ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def tree_antipode(t: Tree) -> tuple[tuple[Forest, int], ...]:
    """``S(T) = -T - sum S(pruned) trunk`` over the proper terms of ``Delta(T)``."""
    out = Counter({(t,): -1})
    for left, right, m in tree_coproduct(t):
        if not left or not right:
            continue
        for f, c in forest_antipode(left):
            out[merge(f, right)] -= m * c
    return tuple((f, c) for f, c in sorted(out.items(), key=lambda i: forest_key(i[0])) if c)


@lru_cache(maxsize=None)
def forest_antipode(f: Forest) -> tuple[tuple[Forest, int], ...]:
    out = Counter({EMPTY: 1})
    for t in f:
        nxt = Counter()
        for g, c in out.items():
            for h, d in tree_antipode(t):
                nxt[merge(g, h)] += c * d
        out = nxt
    return tuple((g, c) for g, c in sorted(out.items(), key=lambda i: forest_key(i[0])) if c)
