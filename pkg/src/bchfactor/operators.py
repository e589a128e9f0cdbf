"""Filtration-preserving linear operators with weights, and identity checkers.

An :class:`OperatorDescriptor` bundles a linear map ``P`` on one element type
with its weight ``theta`` and capability claims.  Claims are never trusted:
the ``check_*`` functions return per-sample reports of the form
``{identity, sample, residual, pass}`` and the engine verifies what it needs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .core import as_rational, commutator
from .errors import FlagError
from .serialize import encode, is_zero_value


@dataclass(frozen=True)
class OperatorDescriptor:
    """A linear map with weight and claimed properties.

    ``degree_shift`` is how much ``P`` is known to raise the filtration
    degree (1 for the Riemann integral); the engine uses it to accept
    inputs whose own degree is 0.
    """

    name: str
    fn: Callable = field(repr=False, compare=False)
    weight: Fraction = Fraction(1)
    claims_rota_baxter: bool = False
    claims_idempotent: bool = False
    claims_multiplicative: bool = False
    degree_shift: int = 0

    def __post_init__(self):
        object.__setattr__(self, "weight", as_rational(self.weight))

    def __call__(self, x):
        return self.fn(x)

    def complement(self, x):
        """``P~(x) = theta * x - P(x)``."""
        return x * self.weight - self.fn(x)

    def complement_operator(self) -> "OperatorDescriptor":
        return OperatorDescriptor(
            f"{self.weight}*id-{self.name}", self.complement, self.weight,
            self.claims_rota_baxter, self.claims_idempotent and self.weight == 1, False, 0,
        )

    def scaled(self, c) -> "OperatorDescriptor":
        """``c * P``; a weight-theta Rota-Baxter map scales to weight ``c * theta``."""
        c = as_rational(c)
        return OperatorDescriptor(
            f"{c}*{self.name}", lambda x: self.fn(x) * c, self.weight * c,
            self.claims_rota_baxter, self.claims_idempotent and c == 1,
            self.claims_multiplicative and c == 1, self.degree_shift,
        )


# -- constructors ---------------------------------------------------------------------

def pole_projection() -> OperatorDescriptor:
    """Strict pole part on :class:`LaurentSeries` (minimal subtraction)."""
    return OperatorDescriptor("R", lambda x: x.pole_part(), 1, claims_rota_baxter=True,
                              claims_idempotent=True)


def entrywise_lift(op: OperatorDescriptor) -> OperatorDescriptor:
    """Apply a coefficient operator to every entry of a :class:`TriangularMatrix`."""
    return OperatorDescriptor(f"{op.name}[entrywise]", lambda m: m.map_entries(op.fn), op.weight,
                              op.claims_rota_baxter, op.claims_idempotent, False, op.degree_shift)


def coefficientwise_lift(op: OperatorDescriptor) -> OperatorDescriptor:
    """``sum a_n t^n -> sum P(a_n) t^n`` on :class:`AdjoinedSeries`."""
    return OperatorDescriptor(f"{op.name}[t]", lambda s: s.map_coefficients(op.fn), op.weight,
                              op.claims_rota_baxter, op.claims_idempotent,
                              op.claims_multiplicative, op.degree_shift)


def riemann_integral_operator() -> OperatorDescriptor:
    """``f -> int_0^x f`` on :class:`MatrixPolyFunction`, weight zero.

    Terms pushed above ``x^q`` are dropped, which is exact in the x-adic
    truncation because ``x^{q+1}`` is an ideal.
    """
    return OperatorDescriptor("I", lambda f: f.riemann_integral(truncate=True), 0,
                              claims_rota_baxter=True, degree_shift=1)


def evaluation_morphism() -> OperatorDescriptor:
    """``x -> 0`` on ``M_d(Q[x])[[t]]``: an idempotent algebra morphism, weight one."""
    from .algebras.matrixpoly import evaluate_at_zero

    return OperatorDescriptor("ev0", evaluate_at_zero, 1, claims_rota_baxter=True,
                              claims_idempotent=True, claims_multiplicative=True)


def formal_p_operator(weight=1) -> OperatorDescriptor:
    """The formal symbol P on the free operated algebra; no relation is claimed.

    ``weight`` only fixes which complement the weight variants use.
    """
    from .free_operated import formal_p

    return OperatorDescriptor("P", formal_p, weight)


def parity_projector(tag: str = "-") -> OperatorDescriptor:
    """Keep the words with an odd (``tag="-"``) or even (``"+"``) number of minus-tagged letters."""
    from .free_operated import count_tag

    want = 1 if tag == "-" else 0

    def project(x):
        return x.map_words(lambda w: {w: 1} if count_tag(w, "-") % 2 == want else {})

    return OperatorDescriptor(f"pi{tag}", project, 1, claims_idempotent=True)


def map_matrix_coefficients(x, fn):
    """Apply ``fn`` to every matrix coefficient of a matrix-valued series."""
    if isinstance(x, np.ndarray):
        return fn(x)
    from .algebras.adjoined import AdjoinedSeries

    if isinstance(x, AdjoinedSeries):
        return x.map_coefficients(lambda c: map_matrix_coefficients(c, fn))
    return x.map_coefficients(fn)


def symmetric_part(m: np.ndarray) -> np.ndarray:
    return (m + m.T) / 2


def antisymmetric_part(m: np.ndarray) -> np.ndarray:
    return (m - m.T) / 2


def antisymmetric_projector() -> OperatorDescriptor:
    return OperatorDescriptor("asym", lambda x: map_matrix_coefficients(x, antisymmetric_part), 1,
                              claims_idempotent=True)


def symmetric_projector() -> OperatorDescriptor:
    return OperatorDescriptor("sym", lambda x: map_matrix_coefficients(x, symmetric_part), 1,
                              claims_idempotent=True)


def strictly_lower_part(m: np.ndarray) -> np.ndarray:
    out = m.copy()
    for i in range(m.shape[0]):
        for j in range(i, m.shape[1]):
            out[i, j] = Fraction(0)
    return out


def lower_triangular_projector() -> OperatorDescriptor:
    """Projection of ``gl_d = n_- + b_+`` onto the strictly lower triangular part.

    Both summands are subalgebras, so this idempotent is Rota-Baxter of weight one.
    """
    return OperatorDescriptor("lower", lambda x: map_matrix_coefficients(x, strictly_lower_part), 1,
                              claims_rota_baxter=True, claims_idempotent=True)


# -- derived structures -----------------------------------------------------------------

def double_product(a, b, P: OperatorDescriptor):
    """``a *_P b = P(a) b + a P(b) - theta a b``."""
    return P(a) * b + a * P(b) - a * b * P.weight


def modified_operator(P: OperatorDescriptor) -> OperatorDescriptor:
    """``B = theta id - 2P``."""
    return OperatorDescriptor(f"B[{P.name}]", lambda x: x * P.weight - P(x) * 2, P.weight)


def double_exp(a, P: OperatorDescriptor):
    """``1 + sum_{n>=1} a^{*n}/n!`` with powers taken in the double product ``*_P``.

    The ``*_P`` product has no unit of its own; the leading ``1`` is formal
    and only ``double_exp(a, P) - 1`` carries information.
    """
    from .core import _require_positive_degree, _series_guard
    from .errors import NonConvergence

    _require_positive_degree(a, "exp")
    result = a.one()
    term = None
    for k in range(1, _series_guard(a) + 1):
        term = a if k == 1 else double_product(term, a, P) / k
        if term.is_zero():
            return result
        result = result + term
    raise NonConvergence("double-product exponential did not terminate")


# -- identity checkers ---------------------------------------------------------------

def _entry(identity, sample, residual):
    ok = is_zero_value(residual)
    return {"identity": identity, "sample": sample,
            "residual": "0" if ok else encode(residual), "pass": ok}


def check_rb_identity(P: OperatorDescriptor, samples: Iterable[tuple], seed: int | None = None,
                      lie: bool = True) -> list[dict]:
    """Residuals of the Rota-Baxter relation, the mixed relation and its Lie form.

    ``P(x)P(y) + theta P(xy) - P(xP(y)) - P(P(x)y)``,
    ``P(x)P~(y) - P~(P(x)y) - P(xP~(y))`` and
    ``[P(x),P(y)] + theta P([x,y]) - P([P(x),y] + [x,P(y)])``.
    """
    theta = P.weight
    report = []
    for i, (x, y) in enumerate(samples):
        tag = {"index": i} if seed is None else {"index": i, "seed": seed}
        Px, Py = P(x), P(y)
        report.append(_entry("rota-baxter", tag,
                             Px * Py + P(x * y) * theta - P(x * Py) - P(Px * y)))
        Qy = P.complement(y)
        report.append(_entry("mixed", tag,
                             Px * Qy - P.complement(Px * y) - P(x * Qy)))
        if lie:
            report.append(_entry("rota-baxter-lie", tag,
                                 commutator(Px, Py) + P(commutator(x, y)) * theta
                                 - P(commutator(Px, y) + commutator(x, Py))))
    return report


def check_modified_identity(P: OperatorDescriptor, samples: Iterable[tuple]) -> list[dict]:
    """``B(x)B(y) + theta^2 xy = B(B(x)y + xB(y))`` for ``B = theta id - 2P``."""
    B = modified_operator(P)
    t2 = P.weight ** 2
    return [
        _entry("modified-rota-baxter", {"index": i},
               B(x) * B(y) + x * y * t2 - B(B(x) * y + x * B(y)))
        for i, (x, y) in enumerate(samples)
    ]


def check_idempotent_structure(P: OperatorDescriptor, samples: Sequence) -> list[dict]:
    """For idempotent weight-one P: ``B^2 = id``, ``B P = -P``, ``B P~ = P~``,
    ``P + P~ = id``, ``P P~ = 0`` and ``P P = P``."""
    B = modified_operator(P)
    out = []
    for i, x in enumerate(samples):
        tag = {"index": i}
        Px, Qx = P(x), P.complement(x)
        out.append(_entry("B^2=id", tag, B(B(x)) - x))
        out.append(_entry("BP=-P", tag, B(Px) + Px))
        out.append(_entry("BP~=P~", tag, B(Qx) - Qx))
        out.append(_entry("P+P~=id", tag, Px + Qx - x))
        out.append(_entry("PP~=0", tag, P(Qx)))
        out.append(_entry("PP=P", tag, P(Px) - Px))
    return out


def check_image_closure(P: OperatorDescriptor, samples: Iterable[tuple]) -> list[dict]:
    """Images of P and P~ are subalgebras: ``P(x)P(y) in im P`` via ``P(x)P(y) = P(x *_P y)``."""
    out = []
    for i, (x, y) in enumerate(samples):
        tag = {"index": i}
        out.append(_entry("P(x*y)=P(x)P(y)", tag, P(double_product(x, y, P)) - P(x) * P(y)))
        out.append(_entry("P~(x*y)=-P~(x)P~(y)", tag,
                          P.complement(double_product(x, y, P)) + P.complement(x) * P.complement(y)))
    return out


def check_multiplicative(P: OperatorDescriptor, samples: Iterable[tuple]) -> list[dict]:
    return [_entry("P(xy)=P(x)P(y)", {"index": i}, P(x * y) - P(x) * P(y))
            for i, (x, y) in enumerate(samples)]


def check_idempotent(P: OperatorDescriptor, samples: Iterable) -> list[dict]:
    return [_entry("PP=P", {"index": i}, P(P(x)) - P(x)) for i, x in enumerate(samples)]


def all_pass(report: Iterable[dict]) -> bool:
    return all(entry["pass"] for entry in report)


def first_failure(report: Iterable[dict]) -> dict | None:
    return next((entry for entry in report if not entry["pass"]), None)


def require_multiplicative_idempotent(P: OperatorDescriptor, samples: Sequence) -> None:
    """Raise :class:`FlagError` unless P claims and passes both properties on ``samples``."""
    if not (P.claims_multiplicative and P.claims_idempotent):
        raise FlagError(f"operator {P.name} is not flagged idempotent and multiplicative")
    pairs = [(x, y) for x in samples for y in samples]
    if not (all_pass(check_multiplicative(P, pairs)) and all_pass(check_idempotent(P, samples))):
        raise FlagError(f"operator {P.name} failed the multiplicativity/idempotency check")


def laurent_grid(span: int):
    """Ring with caps ``(2 span, 2 span)`` and all monomial pairs with exponents in [-span, span].

    The caps are chosen so no product on the grid is truncated or overflows.
    """
    from .algebras.laurent import LaurentRing

    ring = LaurentRing(2 * span, 2 * span)
    monomials = [ring.monomial(k) for k in range(-span, span + 1)]
    return ring, [(x, y) for x in monomials for y in monomials]
