"""Render Lie elements of the free operated algebra in bracket notation.

``format_lie`` turns an :class:`OperatedPolynomial` that happens to be a Lie
element (built from generators and ``P`` by commutators) back into a sum of
right-normed brackets, e.g. ``1/4*[P[[P[a],a]],a] + 1/12*[a,[P[a],a]]``.

The procedure is exact linear algebra:

1. The words that ``P`` is applied to at the top level are grouped into a
   basis of "operator letters" ``P[m]`` (RREF of the coefficient vectors of
   each context), each rendered recursively with leading coefficient 1.
2. The polynomial is rewritten as an associative polynomial over those
   letters and the generators, using pivot words.
3. For each multiset of letters, right-normed brackets in lexicographic
   letter order are selected greedily until they span, and the component is
   solved for exactly.  Anything left over raises :class:`NotLieError`.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import permutations

from ._linalg import Echelon
from .core import format_rational
from .errors import NotLieError
from .free_operated import OperatedPolynomial, OpApply, word_degree, word_key


def right_normed(letters):
    """Expansion of ``[l1,[l2,...,[l_{n-1},l_n]]]`` over words of letter ids."""
    if len(letters) == 1:
        return {tuple(letters): Fraction(1)}
    head, rest = letters[0], right_normed(letters[1:])
    out = defaultdict(Fraction)
    for w, c in rest.items():
        out[(head,) + w] += c
        out[w + (head,)] -= c
    return {w: c for w, c in out.items() if c}


def _bracket_expr(letter_exprs):
    expr = letter_exprs[-1]
    for e in reversed(letter_exprs[:-1]):
        expr = ("br", e, expr)
    return expr


class _Letter:
    __slots__ = ("expr", "expansion", "pivot", "pivot_coef", "key")

    def __init__(self, expr, expansion, pivot, pivot_coef, key):
        self.expr = expr
        self.expansion = expansion
        self.pivot = pivot
        self.pivot_coef = pivot_coef
        self.key = key


def lie_terms(p: OperatedPolynomial) -> list[tuple[Fraction, tuple]]:
    """Decompose ``p`` into ``[(coefficient, bracket expression), ...]``.

    Expressions are nested tuples ``("gen", g)``, ``("P", terms)`` and
    ``("br", left, right)``.
    """
    out = []
    for component in p.components().values():
        out.extend(_lie_homogeneous(component))
    return out


def _lie_homogeneous(p: OperatedPolynomial):
    terms = p.terms()
    if () in terms:
        raise NotLieError("a Lie element has no constant term")

    contexts: dict[tuple, dict] = defaultdict(dict)
    generators = set()
    for w, c in terms.items():
        for i, atom in enumerate(w):
            if isinstance(atom, OpApply):
                vec = contexts[(w[:i], w[i + 1:])]
                vec[atom.word] = vec.get(atom.word, 0) + c
            else:
                generators.add(atom)

    letters = [
        _Letter(("gen", g), {g: Fraction(1)}, g, Fraction(1), (1, g.index, g.name))
        for g in generators
    ]
    by_degree = defaultdict(list)
    for vec in contexts.values():
        by_degree[word_degree(next(iter(vec)))].append(vec)
    for vecs in by_degree.values():
        ech = Echelon(column_key=word_key)
        for i, vec in enumerate(vecs):
            ech.add(vec, i)
        for pivot, row in ech.reduced_rows():
            inner = lie_terms(OperatedPolynomial(row, p.order))
            s = inner[0][0]
            inner = [(c / s, e) for c, e in inner]
            degree = word_degree(pivot)
            letters.append(_Letter(
                ("P", inner),
                {OpApply(w): c / s for w, c in row.items()},
                OpApply(pivot), 1 / s,
                (0, -degree, word_key(pivot)),
            ))
    letters.sort(key=lambda L: L.key)
    pivot_index = {L.pivot: i for i, L in enumerate(letters)}

    q = defaultdict(Fraction)
    for w, c in terms.items():
        if all(atom in pivot_index for atom in w):
            ids = tuple(pivot_index[a] for a in w)
            denom = Fraction(1)
            for i in ids:
                denom *= letters[i].pivot_coef
            q[ids] += c / denom
    q = {w: c for w, c in q.items() if c}

    if _expand(q, letters, p.order) != p:
        raise NotLieError(f"{p} is not in the algebra generated by its letters")

    groups = defaultdict(dict)
    for w, c in q.items():
        groups[tuple(sorted(w))][w] = c

    result = []
    for multiset in sorted(groups, key=lambda m: (len(m), m)):
        ech = Echelon()
        chosen = []
        for cand in sorted(set(permutations(multiset))):
            if ech.add(right_normed(cand), cand):
                chosen.append(cand)
        coeffs = ech.express(groups[multiset])
        if coeffs is None:
            raise NotLieError(f"{p} is not a Lie element")
        for cand in chosen:
            c = coeffs.get(cand, 0)
            if c:
                result.append((c, _bracket_expr([letters[i].expr for i in cand])))
    return result


def _expand(q, letters, order):
    out = defaultdict(Fraction)
    for ids, c in q.items():
        partial = {(): c}
        for i in ids:
            nxt = defaultdict(Fraction)
            for w, v in partial.items():
                for atom, e in letters[i].expansion.items():
                    nxt[w + (atom,)] += v * e
            partial = nxt
        for w, v in partial.items():
            out[w] += v
    return OperatedPolynomial(dict(out), order)


def format_expr(expr) -> str:
    kind = expr[0]
    if kind == "gen":
        return expr[1].name
    if kind == "P":
        return f"P[{format_terms(expr[1])}]"
    return f"[{format_expr(expr[1])},{format_expr(expr[2])}]"


def format_terms(terms) -> str:
    parts = []
    for c, e in terms:
        body = format_expr(e)
        if c == 1:
            text = body
        elif c == -1:
            text = "-" + body
        else:
            text = f"{format_rational(c)}*{body}"
        if parts and text.startswith("-"):
            parts.append(" - " + text[1:])
        elif parts:
            parts.append(" + " + text)
        else:
            parts.append(text)
    return "".join(parts) if parts else "0"


def format_lie(p: OperatedPolynomial) -> str:
    """Bracket form of a Lie element; raises :class:`NotLieError` otherwise."""
    return format_terms(lie_terms(p))
