"""Independent reference computations used only by the tests."""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np


def bernoulli_by_division(n: int) -> list[Fraction]:
    """Coefficients of x / (e^x - 1) by long division of power series."""
    denom = [Fraction(1, math.factorial(k + 1)) for k in range(n + 1)]  # (e^x - 1) / x
    out = []
    for k in range(n + 1):
        rhs = Fraction(1 if k == 0 else 0)
        rhs -= sum(out[j] * denom[k - j] for j in range(k))
        out.append(rhs / denom[0])
    return out


def frac_matrix(rows) -> np.ndarray:
    return np.array([[Fraction(v) for v in r] for r in rows], dtype=object)


def nilpotent_exp(m: np.ndarray) -> np.ndarray:
    d = m.shape[0]
    out = np.identity(d, dtype=object) * Fraction(1)
    term = out.copy()
    for k in range(1, d + 1):
        term = term.dot(m) / k
        out = out + term
    return out


def nilpotent_log(u: np.ndarray) -> np.ndarray:
    d = u.shape[0]
    n = u - np.identity(d, dtype=object) * Fraction(1)
    out = np.zeros((d, d), dtype=object) * Fraction(0)
    power = n.copy()
    for k in range(1, d + 1):
        out = out + power * Fraction((-1) ** (k + 1), k)
        power = power.dot(n)
    return out


def strict_upper(gen, d: int, lo: int = -4, hi: int = 4) -> np.ndarray:
    m = np.zeros((d, d), dtype=object) * Fraction(0)
    for i in range(d):
        for j in range(i + 1, d):
            m[i, j] = Fraction(int(gen.integers(lo, hi + 1)), int(gen.integers(1, 4)))
    return m


def brute_force_tree_coproduct(tree):
    """Sum over admissible cuts: every subset of edges such that no path from
    the root meets two cut edges.  Returns {(pruned forest, trunk): multiplicity}."""
    from collections import Counter

    from bchfactor.hopf.trees import make_forest, make_tree

    # label vertices: represent a tree as (children list); edges = (parent path, child index)
    def cuts(t):
        # yield (trunk, pruned_list) pairs for every admissible cut of t (including empty cut)
        options_per_child = []
        for child in t:
            opts = [(None, [child])]  # cut the edge to this child: whole subtree pruned
            for trunk, pruned in cuts(child):
                opts.append((trunk, pruned))
            options_per_child.append(opts)
        results = [([], [])]
        for opts in options_per_child:
            results = [(kids + ([tr] if tr is not None else []), pr + p)
                       for kids, pr in results for tr, p in opts]
        for kids, pruned in results:
            yield make_tree(kids), pruned

    counts = Counter()
    for trunk, pruned in cuts(tree):
        counts[(make_forest(pruned), make_forest([trunk]))] += 1
    counts[(make_forest([tree]), make_forest([]))] += 1
    return counts
