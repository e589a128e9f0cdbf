"""Linear functionals on the tree Hopf algebra and their convolution algebra.

A :class:`Functional` stores its values on every forest of degree <= D in a
commutative target (``QQ`` or a :class:`LaurentRing`).  Under convolution
``f * g = m (f x g) Delta`` these functionals form a complete filtered
algebra (filtration: vanishing below forest degree n) with unit the counit
``e``, so the generic exp/log/BCH/chi machinery applies unchanged.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..algebras.laurent import QQ, LaurentRing, LaurentSeries, RationalField, parse_laurent
from ..core import INF, FilteredElement, as_rational
from ..errors import DegreeOverflow, NotCharacter, TargetMismatch, TruncationMismatch
from ..operators import OperatorDescriptor
from .trees import (
    EMPTY, Forest, Tree, forest_antipode, forest_coproduct, forest_degree, forest_key,
    forests_up_to, format_forest, merge, parse_forest, trees_up_to,
)

MAX_DEGREE = 8


def _ring_context(target):
    return target.context


def ring_from_context(ctx):
    if ctx[0] == "QQ":
        return QQ
    return LaurentRing(ctx[1], ctx[2])


def default_laurent_ring(max_degree: int) -> LaurentRing:
    """Caps ``(D, D)``: values on degree-k forests with exponents in [-k, k] never overflow."""
    return LaurentRing(max_degree, max_degree)


def _check_max_degree(D: int) -> None:
    if not 1 <= D <= MAX_DEGREE:
        raise DegreeOverflow(f"degree cap must be between 1 and {MAX_DEGREE}, got {D}")


def decode_value(text, target):
    if isinstance(target, RationalField):
        return as_rational(text)
    if isinstance(text, LaurentSeries):
        return target.coerce(text)
    if isinstance(text, (int, Fraction)):
        return target.coerce(text)
    if isinstance(text, dict):
        return target.decode(text)
    return parse_laurent(str(text), target)


class Functional(FilteredElement):
    """A linear map ``H_{<=D} -> target``; only nonzero values are stored."""

    __slots__ = ("_v", "_D", "_target")

    def __init__(self, values: Mapping[Forest, object], max_degree: int, target=QQ):
        _check_max_degree(max_degree)
        self._D = max_degree
        self._target = target
        v = {}
        for f, val in values.items():
            if forest_degree(f) > max_degree:
                raise DegreeOverflow(f"forest {format_forest(f)} exceeds degree {max_degree}")
            val = target.coerce(val)
            if val:
                v[f] = val
        self._v = v

    @classmethod
    def _raw(cls, values, D, target):
        obj = cls.__new__(cls)
        obj._v, obj._D, obj._target = values, D, target
        return obj

    # -- FilteredElement protocol ---------------------------------------------
    @property
    def order(self) -> int:
        return self._D

    @property
    def max_degree(self) -> int:
        return self._D

    @property
    def target(self):
        return self._target

    @property
    def degree(self):
        return min((forest_degree(f) for f in self._v), default=INF)

    @property
    def context(self):
        return ("hopf", self._D, _ring_context(self._target))

    def _check(self, other) -> None:
        if isinstance(other, Functional):
            if other._target != self._target:
                raise TargetMismatch(f"targets {self._target!r} and {other._target!r} differ")
            if other._D != self._D:
                raise TruncationMismatch(f"degree caps {self._D} and {other._D} differ")
            return
        super()._check(other)

    def _add(self, other):
        v = dict(self._v)
        for f, val in other._v.items():
            s = v[f] + val if f in v else val
            if s:
                v[f] = s
            else:
                v.pop(f, None)
        return Functional._raw(v, self._D, self._target)

    def _scale(self, c):
        if not c:
            return self.zero()
        return Functional._raw({f: val * c for f, val in self._v.items()}, self._D, self._target)

    def _mul(self, other):
        """Convolution ``(f * g)(F) = sum f(F') g(F'')`` over ``Delta(F)``."""
        a, b = self._v, other._v
        out = {}
        if not a or not b:
            return self.zero()
        for F in forests_up_to(self._D):
            total = None
            for left, right, m in forest_coproduct(F):
                x = a.get(left)
                if x is None:
                    continue
                y = b.get(right)
                if y is None:
                    continue
                term = x * y if m == 1 else x * y * m
                total = term if total is None else total + term
            if total is not None and total:
                out[F] = total
        return Functional._raw(out, self._D, self._target)

    def one(self):
        return Functional._raw({EMPTY: self._target.one()}, self._D, self._target)

    def zero(self):
        return Functional._raw({}, self._D, self._target)

    def is_zero(self) -> bool:
        return not self._v

    # -- access -----------------------------------------------------------------
    def __call__(self, forest):
        if isinstance(forest, str):
            forest = parse_forest(forest)
        if forest_degree(forest) > self._D:
            raise DegreeOverflow(f"forest {format_forest(forest)} exceeds degree {self._D}")
        return self._v.get(forest, self._target.zero())

    def values(self) -> dict:
        """Nonzero values by forest, in graded order."""
        return {f: self._v[f] for f in sorted(self._v, key=forest_key)}

    def tree_values(self) -> dict:
        return {f[0]: val for f, val in self.values().items() if len(f) == 1}

    def map_values(self, fn) -> "Functional":
        return Functional({f: fn(val) for f, val in self._v.items()}, self._D, self._target)

    def is_character(self) -> bool:
        one = self._target.one()
        if self(EMPTY) != one:
            return False
        for F in forests_up_to(self._D):
            if len(F) < 2:
                continue
            prod = one
            for t in F:
                prod = prod * self((t,))
            if prod != self(F):
                return False
        return True

    def is_infinitesimal(self) -> bool:
        return all(len(f) == 1 for f in self._v)

    def require_character(self, what: str = "input") -> None:
        if not self.is_character():
            raise NotCharacter(f"{what} is not a character")

    # -- text and JSON ----------------------------------------------------------------
    def __str__(self):
        if not self._v:
            return "0"
        return "\n".join(f"{format_forest(f)}: {val}" for f, val in self.values().items())

    def __repr__(self):
        return f"Functional(D={self._D}, target={self._target!r}, support={len(self._v)})"

    def to_dict(self) -> dict:
        return {
            "type": "functional",
            "max_degree": self._D,
            "target": list(_ring_context(self._target)),
            "values": {format_forest(f): str(val) if isinstance(val, LaurentSeries)
                       else _fmt(val) for f, val in self.values().items()},
        }

    def to_json(self) -> dict:
        return self.to_dict()

    @classmethod
    def from_dict(cls, data: Mapping) -> "Functional":
        target = ring_from_context(tuple(data["target"]))
        values = {parse_forest(k): decode_value(v, target) for k, v in data["values"].items()}
        return cls(values, int(data["max_degree"]), target)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- constructors -------------------------------------------------------------------

def _tree_keyed(values: Mapping, target) -> dict[Tree, object]:
    out = {}
    for k, v in values.items():
        if isinstance(k, str):
            f = parse_forest(k)
            if len(f) != 1:
                raise ValueError(f"{k!r} is not a single tree")
            k = f[0]
        out[k] = decode_value(v, target)
    return out


def counit(max_degree: int, target=QQ) -> Functional:
    """The unit ``e = u o epsilon`` of the convolution algebra."""
    return Functional({EMPTY: target.one()}, max_degree, target)


def character(tree_values: Mapping, max_degree: int, target=QQ) -> Functional:
    """Extend values on trees (keys: trees or tree literals) multiplicatively to forests.

    Trees of degree <= D that are not listed get the value 0.
    """
    tv = _tree_keyed(tree_values, target)
    for t in tv:
        if forest_degree((t,)) > max_degree:
            raise DegreeOverflow(f"tree exceeds degree {max_degree}")
    one = target.one()
    values = {}
    for F in forests_up_to(max_degree):
        prod = one
        for t in F:
            prod = prod * tv.get(t, target.zero())
            if not prod:
                break
        values[F] = prod
    return Functional(values, max_degree, target)


def infinitesimal_character(tree_values: Mapping, max_degree: int, target=QQ) -> Functional:
    """Values on single trees only; zero on the unit and on products."""
    tv = _tree_keyed(tree_values, target)
    return Functional({(t,): v for t, v in tv.items()}, max_degree, target)


def character_from_json(data: Mapping, max_degree: int, laurent: bool | None = None) -> Functional:
    """Parse ``{"*": "1/eps + 1", "*[*]": "eps^-2"}``; Laurent target if any value mentions eps."""
    if laurent is None:
        laurent = any("eps" in str(v) for v in data.values())
    target = default_laurent_ring(max_degree) if laurent else QQ
    return character(data, max_degree, target)


def compose_antipode(f: Functional) -> Functional:
    """``f o S``; for a character this is its convolution inverse."""
    out = {}
    for F in forests_up_to(f.max_degree):
        total = f.target.zero()
        for G, c in forest_antipode(F):
            total = total + f(G) * c
        out[F] = total
    return Functional(out, f.max_degree, f.target)


def grading_involution(f: Functional) -> Functional:
    """``f-bar(h) = (-1)^{|h|} f(h)``, an algebra involution of the convolution algebra."""
    return Functional._raw({F: (-v if forest_degree(F) % 2 else v) for F, v in f._v.items()},
                           f.max_degree, f.target)


def parity_part(f: Functional, odd: bool) -> Functional:
    """``pi_-(f) = (f - f-bar)/2`` (odd degrees) or ``pi_+(f) = (f + f-bar)/2`` (even)."""
    want = 1 if odd else 0
    return Functional._raw({F: v for F, v in f._v.items() if forest_degree(F) % 2 == want},
                           f.max_degree, f.target)


def pi_minus() -> OperatorDescriptor:
    """Odd-part projector; idempotent but not Rota-Baxter."""
    return OperatorDescriptor("pi-", lambda f: parity_part(f, True), 1, claims_idempotent=True)


def pi_plus() -> OperatorDescriptor:
    return OperatorDescriptor("pi+", lambda f: parity_part(f, False), 1, claims_idempotent=True)


def pole_lift(R: OperatorDescriptor | None = None) -> OperatorDescriptor:
    """``R(psi) = R o psi`` on Laurent-valued functionals (default: pole part)."""
    if R is None:
        return OperatorDescriptor("R[hopf]", lambda f: f.map_values(lambda v: v.pole_part()), 1,
                                  claims_rota_baxter=True, claims_idempotent=True)
    return OperatorDescriptor(f"{R.name}[hopf]", lambda f: f.map_values(R.fn), R.weight,
                              R.claims_rota_baxter, R.claims_idempotent, False, R.degree_shift)


def product_closure_parity(max_degree: int) -> bool:
    """Parity of forests is additive under disjoint union: ``H_i H_j in H_{i+j}``."""
    forests = forests_up_to(max_degree)
    return all(
        forest_degree(merge(f, g)) % 2 == (forest_degree(f) + forest_degree(g)) % 2
        for f in forests for g in forests if forest_degree(f) + forest_degree(g) <= max_degree
    )


__all__ = [
    "Functional", "counit", "character", "infinitesimal_character", "character_from_json",
    "compose_antipode", "grading_involution", "parity_part", "pi_minus", "pi_plus",
    "pole_lift", "default_laurent_ring", "product_closure_parity", "MAX_DEGREE",
    "trees_up_to",
]
