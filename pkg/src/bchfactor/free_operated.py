"""The free associative algebra over Q with one formal linear operator P.

Basis words are tuples of atoms.  An atom is either a :class:`Generator`
(carrying a positive grade and an optional parity tag) or an
:class:`OpApply` wrapping a basis word, which is how ``P`` is applied: by
linearity ``P`` only ever sees single words, and no relation beyond
linearity is imposed on it.

Text forms
----------
Raw word form, produced by ``str()`` and read back by :func:`parse_raw`::

    poly  := term (("+" | "-") term)*          (a leading "-" is allowed)
    term  := [rational "*"] word | rational
    word  := "1" | atom ("." atom)*
    atom  := NAME | "P[" word "]"

so ``-1/2*P[a].a + 1/2*a.P[a]`` is ``1/2 [a, P(a)]``.  Infix expressions
such as ``"P(2*a + b)*a - [a, P(a)]/2"`` go through :func:`normalize`;
there ``[x, y]`` is the commutator and ``P(...)`` applies the operator.
Bracket rendering lives in :mod:`bchfactor.brackets`.
"""
from __future__ import annotations

import ast
import re
from collections import defaultdict
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from gmpy2 import mpq

from .core import INF, FilteredElement, as_rational, format_rational, is_scalar
from .errors import TruncationMismatch

Word = tuple


class Generator:
    """A free generator.  ``grade`` is its filtration degree (default 1).

    Instances are interned, so equal generators are identical objects and
    words hash at C speed.
    """

    __slots__ = ("index", "name", "grade", "tag")
    _interned: dict = {}

    def __new__(cls, index: int, name: str, grade: int = 1, tag: str | None = None):
        key = (index, name, grade, tag)
        obj = cls._interned.get(key)
        if obj is None:
            if grade < 1:
                raise ValueError("generator grade must be positive")
            if tag not in (None, "+", "-"):
                raise ValueError("tag must be None, '+' or '-'")
            obj = super().__new__(cls)
            obj.index, obj.name, obj.grade, obj.tag = key
            cls._interned[key] = obj
        return obj

    def __reduce__(self):
        return (Generator, (self.index, self.name, self.grade, self.tag))

    @property
    def degree(self) -> int:
        return self.grade

    @property
    def key(self):
        return (0, self.index, self.name)

    def __repr__(self):
        return f"Generator({self.index}, {self.name!r}, grade={self.grade}, tag={self.tag!r})"

    def __str__(self):
        return self.name


class OpApply:
    """The atom ``P[w]`` for a basis word ``w``; its degree is that of ``w``.  Interned."""

    __slots__ = ("word", "degree", "_key")
    _interned: dict = {}

    def __new__(cls, word: Word):
        word = tuple(word)
        obj = cls._interned.get(word)
        if obj is None:
            obj = super().__new__(cls)
            obj.word = word
            obj.degree = word_degree(word)
            obj._key = None
            cls._interned[word] = obj
        return obj

    def __reduce__(self):
        return (OpApply, (self.word,))

    @property
    def key(self):
        if self._key is None:
            self._key = (1, word_key(self.word))
        return self._key

    def __repr__(self):
        return f"OpApply({self.word!r})"

    def __str__(self):
        return f"P[{format_word(self.word)}]"


def word_degree(word: Word) -> int:
    return sum(atom.degree for atom in word)


def word_key(word: Word):
    """Canonical order: graded, then by length, then lexicographic on atoms."""
    return (word_degree(word), len(word), tuple(atom.key for atom in word))


def format_word(word: Word) -> str:
    if not word:
        return "1"
    return ".".join(str(atom) for atom in word)


def _format_terms(items: Iterable[tuple[Fraction, str]]) -> str:
    parts = []
    for c, body in items:
        if body == "1":
            text = format_rational(c)
        elif c == 1:
            text = body
        elif c == -1:
            text = "-" + body
        else:
            text = f"{format_rational(c)}*{body}"
        if not parts:
            parts.append(text)
        elif text.startswith("-"):
            parts.append(" - " + text[1:])
        else:
            parts.append(" + " + text)
    return "".join(parts) if parts else "0"


# Coefficients are stored as gmpy2 rationals for speed; Fractions cross the API.
_ZERO, _ONE = mpq(0), mpq(1)


def _to_mpq(c) -> mpq:
    return c if isinstance(c, type(_ZERO)) else mpq(c.numerator, c.denominator)


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


class OperatedPolynomial(FilteredElement):
    """Finite Q-combination of operated words, truncated above degree ``order``.

    Terms are bucketed by word degree so that products skip pairs whose
    degrees already exceed the truncation order.
    """

    __slots__ = ("_order", "_buckets")

    def __init__(self, terms: Mapping[Word, object] | None = None, order: int = 5):
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        self._order = order
        buckets: dict[int, dict[Word, Fraction]] = {}
        for word, c in (terms or {}).items():
            word = tuple(word)
            c = as_rational(c)
            d = word_degree(word)
            if c == 0 or d > order:
                continue
            b = buckets.setdefault(d, {})
            b[word] = b.get(word, _ZERO) + _to_mpq(c)
        self._buckets = _prune(buckets)

    @classmethod
    def _from_buckets(cls, buckets, order, prune: bool = True):
        obj = cls.__new__(cls)
        obj._order = order
        obj._buckets = _prune(buckets) if prune else buckets
        return obj

    # -- FilteredElement protocol -------------------------------------------
    @property
    def order(self) -> int:
        return self._order

    @property
    def context(self):
        return ("operated", self._order)

    @property
    def degree(self):
        return min(self._buckets) if self._buckets else INF

    def one(self):
        return OperatedPolynomial._from_buckets({0: {(): _ONE}}, self._order)

    def zero(self):
        return OperatedPolynomial._from_buckets({}, self._order)

    def is_zero(self) -> bool:
        return not self._buckets

    def _add(self, other):
        out = {d: dict(b) for d, b in self._buckets.items()}
        for d, b in other._buckets.items():
            tgt = out.setdefault(d, {})
            for w, c in b.items():
                v = tgt.get(w)
                if v is None:
                    tgt[w] = c
                else:
                    v = v + c
                    if v:
                        tgt[w] = v
                    else:
                        del tgt[w]
            if not tgt:
                del out[d]
        return OperatedPolynomial._from_buckets(out, self._order, prune=False)

    def _scale(self, c):
        if c == 0:
            return self.zero()
        c = _to_mpq(c)
        return OperatedPolynomial._from_buckets(
            {d: {w: c * v for w, v in b.items()} for d, b in self._buckets.items()}, self._order,
            prune=False,
        )

    def _mul(self, other):
        N = self._order
        out: dict[int, dict[Word, Fraction]] = {}
        for d1, b1 in self._buckets.items():
            for d2, b2 in other._buckets.items():
                d = d1 + d2
                if d > N:
                    continue
                tgt = out.setdefault(d, {})
                for w1, c1 in b1.items():
                    for w2, c2 in b2.items():
                        w = w1 + w2
                        tgt[w] = tgt.get(w, 0) + c1 * c2
        return OperatedPolynomial._from_buckets(out, N)

    def __eq__(self, other):
        if isinstance(other, OperatedPolynomial):
            if other._order != self._order:
                return NotImplemented
            return self._buckets == other._buckets
        return super().__eq__(other)

    # -- inspection -----------------------------------------------------------
    def terms(self) -> dict[Word, Fraction]:
        return {w: _to_fraction(c) for b in self._buckets.values() for w, c in b.items()}

    def sorted_terms(self) -> list[tuple[Word, Fraction]]:
        return sorted(self.terms().items(), key=lambda item: word_key(item[0]))

    def component(self, degree: int) -> "OperatedPolynomial":
        """Homogeneous part of the given degree."""
        b = self._buckets.get(degree)
        return OperatedPolynomial._from_buckets({degree: dict(b)} if b else {}, self._order)

    def components(self) -> dict[int, "OperatedPolynomial"]:
        return {d: self.component(d) for d in sorted(self._buckets)}

    def coefficient(self, word: Word) -> Fraction:
        return _to_fraction(self._buckets.get(word_degree(word), {}).get(tuple(word), _ZERO))

    def __len__(self):
        return sum(len(b) for b in self._buckets.values())

    def with_order(self, order: int) -> "OperatedPolynomial":
        """Re-truncate explicitly (never done implicitly)."""
        return OperatedPolynomial(self.terms(), order)

    def map_words(self, fn: Callable[[Word], "OperatedPolynomial | Mapping[Word, object]"]):
        """Extend a map defined on basis words linearly."""
        out = self.zero()
        for w, c in self.terms().items():
            img = fn(w)
            if not isinstance(img, OperatedPolynomial):
                img = OperatedPolynomial(img, self._order)
            out = out + img * c
        return out

    def __str__(self):
        return _format_terms((c, format_word(w)) for w, c in self.sorted_terms())

    def __repr__(self):
        return f"OperatedPolynomial({str(self)!r}, order={self._order})"

    def to_json(self) -> dict:
        return {
            "type": "OperatedPolynomial",
            "order": self._order,
            "terms": [[format_word(w), format_rational(c)] for w, c in self.sorted_terms()],
        }


def _prune(buckets):
    out = {}
    for d, b in buckets.items():
        nb = {w: c for w, c in b.items() if c}
        if nb:
            out[d] = nb
    return out


# -- operations ------------------------------------------------------------------

def formal_p(x: OperatedPolynomial) -> OperatedPolynomial:
    """Apply the formal operator: each word ``w`` becomes the atom ``P[w]``."""
    return OperatedPolynomial._from_buckets(
        {d: {(OpApply(w),): c for w, c in b.items()} for d, b in x._buckets.items()},
        x.order,
    )


def lie_bracket(x: OperatedPolynomial, y: OperatedPolynomial) -> OperatedPolynomial:
    if x.context != y.context:
        raise TruncationMismatch("operands have different truncation orders")
    return x * y - y * x


def count_tag(word: Word, tag: str) -> int:
    """Number of generator letters carrying ``tag``, counted inside P[...] too."""
    n = 0
    for atom in word:
        if isinstance(atom, Generator):
            n += atom.tag == tag
        else:
            n += count_tag(atom.word, tag)
    return n


class FreeOperated:
    """Convenience handle on the free operated algebra with named generators.

    >>> A = FreeOperated("x y", order=3)
    >>> x, y = A.gens
    >>> str(x * y - y * x)
    'x.y - y.x'
    """

    def __init__(self, names: str | Sequence[str], order: int = 5,
                 grades: Sequence[int] | None = None, tags: Sequence[str | None] | None = None):
        if isinstance(names, str):
            names = names.split()
        grades = list(grades) if grades is not None else [1] * len(names)
        tags = list(tags) if tags is not None else [None] * len(names)
        self.order = order
        self.generators = tuple(
            Generator(i, n, g, t) for i, (n, g, t) in enumerate(zip(names, grades, tags))
        )
        self._by_name = {g.name: g for g in self.generators}

    @property
    def gens(self) -> tuple[OperatedPolynomial, ...]:
        return tuple(self.poly({(g,): 1}) for g in self.generators)

    def __getitem__(self, name: str) -> OperatedPolynomial:
        return self.poly({(self._by_name[name],): 1})

    def generator(self, name: str) -> Generator:
        return self._by_name[name]

    def poly(self, terms=None) -> OperatedPolynomial:
        return OperatedPolynomial(terms, self.order)

    def one(self) -> OperatedPolynomial:
        return self.poly({(): 1})

    def zero(self) -> OperatedPolynomial:
        return self.poly()

    def normalize(self, expr) -> OperatedPolynomial:
        return normalize(expr, self)

    def parse(self, text: str) -> OperatedPolynomial:
        return parse_raw(text, self)


# -- normalize: infix expressions to canonical form -----------------------------------

def normalize(expr, algebra: FreeOperated) -> OperatedPolynomial:
    """Expand an expression tree to canonical form.

    ``expr`` is either an :class:`OperatedPolynomial` (checked for the right
    truncation order) or an infix string over the algebra's generator names
    with ``+ - * /``, integer powers, ``P(...)`` and commutators ``[x, y]``.
    """
    if isinstance(expr, OperatedPolynomial):
        if expr.order != algebra.order:
            raise TruncationMismatch("expression truncated at a different order")
        return expr
    if is_scalar(expr):
        return algebra.one() * expr
    tree = ast.parse(expr, mode="eval").body
    value = _eval_node(tree, algebra)
    if is_scalar(value):
        return algebra.one() * value
    return value


def _eval_node(node, algebra):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        if node.id not in algebra._by_name:
            raise ValueError(f"unknown generator {node.id!r}")
        return algebra[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand, algebra)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left = _eval_node(node.left, algebra)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise ValueError("exponent must be a literal integer")
            return left ** node.right.value
        right = _eval_node(node.right, algebra)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if not is_scalar(right):
                raise ValueError("can only divide by a rational scalar")
            return left / right
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "P":
        if len(node.args) != 1:
            raise ValueError("P takes exactly one argument")
        arg = _eval_node(node.args[0], algebra)
        if is_scalar(arg):
            arg = algebra.one() * arg
        return formal_p(arg)
    if isinstance(node, ast.List) and len(node.elts) == 2:
        x, y = (_eval_node(e, algebra) for e in node.elts)
        if is_scalar(x) or is_scalar(y):
            return Fraction(0)
        return lie_bracket(x, y)
    raise ValueError(f"unsupported expression: {ast.dump(node)}")


# -- raw word form parser --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(P\[)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    tokens = []
    for m in _TOKEN.finditer(text):
        num, pbr, name, other = m.groups()
        if num:
            tokens.append(("num", num))
        elif pbr:
            tokens.append(("P[", pbr))
        elif name:
            tokens.append(("name", name))
        elif other and not other.isspace():
            tokens.append(("op", other))
    return tokens


def parse_raw(text: str, algebra: FreeOperated) -> OperatedPolynomial:
    """Read the raw word form produced by ``str(OperatedPolynomial)``."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take(kind=None, value=None):
        nonlocal pos
        tok = peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ValueError(f"parse error near token {pos} in {text!r}")
        pos += 1
        return tok

    def word():
        if peek() == ("num", "1"):
            take()
            return ()
        atoms = [atom()]
        while peek() == ("op", "."):
            take()
            atoms.append(atom())
        return tuple(atoms)

    def atom():
        kind, value = peek()
        if kind == "P[":
            take()
            inner = word()
            take("op", "]")
            return OpApply(inner)
        if kind == "name":
            take()
            return algebra.generator(value)
        raise ValueError(f"expected an atom near token {pos} in {text!r}")

    terms: dict[Word, Fraction] = defaultdict(Fraction)
    if peek() == ("num", "0") and len(tokens) == 1:
        return algebra.zero()
    sign = 1
    if peek() == ("op", "-"):
        take()
        sign = -1
    while True:
        coeff = Fraction(sign)
        if peek()[0] == "num":
            coeff *= Fraction(take()[1])
            w = ()
            if peek() == ("op", "*"):
                take()
                w = word()
        else:
            w = word()
        terms[w] += coeff
        kind, value = peek()
        if kind is None:
            break
        take("op")
        if value not in "+-":
            raise ValueError(f"unexpected {value!r} in {text!r}")
        sign = 1 if value == "+" else -1
    return algebra.poly(dict(terms))
