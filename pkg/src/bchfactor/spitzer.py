"""Spitzer/Atkinson fixed-point solvers and the identities they satisfy.

For a Rota-Baxter operator ``P`` of weight ``theta`` the equations

    x = 1 - P(x b)        x' = 1 - P~(b x'),     P~ = theta id - P,

have unique solutions in ``1 + A_1``, and ``x (1 + theta b) x' = 1``.
Each ``*_verify``/``*_check`` function returns a report
``{identity, instance, max_checked_degree, pass}`` (plus a ``details``
dict with residuals on failure).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chi import ChiVariant, chi, decompose_group_element
from .core import FilteredElement, _series_guard, as_rational, exp, inverse, iterate_fixed_point, log
from .errors import DegreeError, NonConvergence
from .operators import OperatorDescriptor, double_exp, require_multiplicative_idempotent
from .serialize import encode


@dataclass(frozen=True)
class SpitzerProblem:
    """``b`` in ``A_1`` with a Rota-Baxter operator; ``a`` is kept when ``b`` came from it."""

    b: FilteredElement
    P: OperatorDescriptor
    a: FilteredElement | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.b.degree + self.P.degree_shift < 1:
            raise DegreeError("b must lie in A_1 (or P must raise degrees)")

    @property
    def theta(self) -> Fraction:
        return self.P.weight

    @property
    def b_check(self) -> FilteredElement:
        """``b~`` with ``(1 + b)(1 + b~) = 1``."""
        return inverse(self.b + 1) - 1

    @classmethod
    def from_exponent(cls, a: FilteredElement, P: OperatorDescriptor) -> "SpitzerProblem":
        """``1 + theta b = exp(theta a)``; for weight zero this is the limit ``b = a``."""
        theta = P.weight
        b = a if theta == 0 else (exp(a * theta) - 1) / theta
        return cls(b, P, a)

    def descriptor(self) -> dict:
        return {"algebra": type(self.b).__name__, "operator": self.P.name,
                "weight": encode(self.theta), "order": self.b.order}


def _report(identity, prob_or_instance, residual, degree, extra=None):
    instance = prob_or_instance.descriptor() if isinstance(prob_or_instance, SpitzerProblem) \
        else dict(prob_or_instance)
    ok = residual.is_zero()
    out = {"identity": identity, "instance": instance, "max_checked_degree": degree, "pass": ok}
    if not ok:
        out["details"] = {"residual": encode(residual)}
    if extra:
        out.setdefault("details", {}).update(extra)
    return out


def solve_left(prob: SpitzerProblem) -> FilteredElement:
    """Fixed point of ``x = 1 - P(x b)``, iterated from 1."""
    one = prob.b.one()
    return iterate_fixed_point(lambda x: one - prob.P(x * prob.b), one, prob.b.order)


def solve_right(prob: SpitzerProblem) -> FilteredElement:
    """Fixed point of ``x' = 1 - P~(b x')`` with ``P~ = theta id - P``."""
    one = prob.b.one()
    return iterate_fixed_point(lambda y: one - prob.P.complement(prob.b * y), one, prob.b.order)


def atkinson_check(prob: SpitzerProblem) -> list[dict]:
    """``x (1 + theta b) x' = 1``; for idempotent P the factors are also re-derived
    from the group decomposition of ``1 + b`` and compared (uniqueness)."""
    x, xp = solve_left(prob), solve_right(prob)
    one = prob.b.one()
    reports = [_report("atkinson", prob, x * (one + prob.b * prob.theta) * xp - one, prob.b.order)]
    if prob.P.claims_idempotent and prob.theta == 1:
        eta_minus, eta_plus = decompose_group_element(one + prob.b, prob.P)
        reports.append(_report("atkinson-uniqueness-left", prob, inverse(eta_minus) - x, prob.b.order))
        reports.append(_report("atkinson-uniqueness-right", prob, inverse(eta_plus) - xp, prob.b.order))
    return reports


def bogoliubov_pair(prob: SpitzerProblem):
    """``u = 1 + P(b x')`` and ``u' = 1 + P~(x b)``; they invert ``x`` and ``x'``."""
    x, xp = solve_left(prob), solve_right(prob)
    one = prob.b.one()
    return one + prob.P(prob.b * xp), one + prob.P.complement(x * prob.b)


def star_exponential(a: FilteredElement, P: OperatorDescriptor) -> FilteredElement:
    """``exp^{*P}(-chi(a))`` for a weight-one Rota-Baxter ``P``.

    With ``b = exp(a) - 1`` one has ``x = 1 + P(E - 1)`` and ``-x b = E - 1``.
    """
    if P.weight != 1:
        raise ValueError("the star exponential is stated for weight one")
    return double_exp(-chi(a, P), P)


def star_exponential_check(prob: SpitzerProblem) -> list[dict]:
    a = prob.a if prob.a is not None else log(prob.b + 1)
    E = star_exponential(a, prob.P)
    x = solve_left(prob)
    one = prob.b.one()
    return [
        _report("star-exponential", prob, one + prob.P(E - 1) - x, prob.b.order),
        _report("star-exponential-product", prob, -(x * prob.b) - (E - 1), prob.b.order),
    ]


def nested_sum(b: FilteredElement, P: OperatorDescriptor, nesting: str, sign: int = -1) -> FilteredElement:
    """``sum_n sign^n T_n`` with ``T_0 = 1`` and ``T_n = P(T_{n-1} b)`` (``"left"``)
    or ``T_n = P(b T_{n-1})`` (``"right"``)."""
    if nesting not in ("left", "right"):
        raise ValueError("nesting must be 'left' or 'right'")
    term = b.one()
    total = b.one()
    for n in range(1, _series_guard(b) + 1):
        term = P(term * b) if nesting == "left" else P(b * term)
        if term.is_zero():
            return total
        total = total + term * (sign ** n)
    raise NonConvergence("nested Spitzer sum did not terminate")


def classical_spitzer_verify(b: FilteredElement, P: OperatorDescriptor, instance=None) -> dict:
    """``exp(-P(log(1 + b))) = sum (-1)^n P(P(...P(b)b)...b)`` (commutative algebras)."""
    lhs = exp(-P(log(b + 1)))
    return _report("classical-spitzer", instance or _instance(b, P), lhs - nested_sum(b, P, "left"), b.order)


def spitzer_theta_commutative_verify(a: FilteredElement, P: OperatorDescriptor, instance=None) -> dict:
    """``exp(-P(log(1 - theta a)/theta)) = sum P(P(...P(a)a)...a)`` for weight ``theta``."""
    theta = P.weight
    lhs = exp(-P(log(1 - a * theta) / theta))
    return _report("spitzer-theta", instance or _instance(a, P),
                   lhs - nested_sum(a, P, "left", sign=1), a.order)


def spitzer_theta_verify(b: FilteredElement, P: OperatorDescriptor, theta=None, N: int | None = None,
                         instance=None) -> list[dict]:
    """Noncommutative Spitzer identity with the weight-theta recursion.

    The left side ``exp(-P(chi_theta(log(1 + theta b)/theta)))`` is compared
    with the right-nested sum ``sum (-1)^n P(b P(b ... P(b)))`` and with the
    left-nested sum ``sum (-1)^n P(P(...P(b)b)...b)``, which is what
    ``x = 1 - P(x b)`` expands to.  Both comparisons are reported.
    """
    theta = P.weight if theta is None else as_rational(theta)
    if theta == 0:
        raise ValueError("theta must be non-zero")
    if theta != P.weight:
        raise ValueError("theta must equal the operator weight")
    arg = log(b * theta + 1) / theta
    lhs = exp(-P(chi(arg, P, ChiVariant.WEIGHT_THETA, theta)))
    inst = instance or _instance(b, P)
    degree = b.order if N is None else N
    return [
        _report("nc-spitzer-right-nested", inst, lhs - nested_sum(b, P, "right"), degree),
        _report("nc-spitzer-left-nested", inst, lhs - nested_sum(b, P, "left"), degree),
    ]


def geometric_series_verify(b: FilteredElement, P: OperatorDescriptor, instance=None) -> list[dict]:
    """For a multiplicative idempotent P:
    ``exp(-P(chi(log(1+b)))) = exp(-P(log(1+b))) = (1 + P(b))^{-1} = solve_left``."""
    a = log(b + 1)
    require_multiplicative_idempotent(P, [a, b, P(b)])
    inst = instance or _instance(b, P)
    with_chi = exp(-P(chi(a, P)))
    plain = exp(-P(a))
    geometric = inverse(P(b) + 1)
    x = solve_left(SpitzerProblem(b, P))
    return [
        _report("geometric-series-chi", inst, with_chi - plain, b.order),
        _report("geometric-series", inst, plain - geometric, b.order),
        _report("geometric-series-solver", inst, geometric - x, b.order),
    ]


def weight_zero_check(a: FilteredElement, P: OperatorDescriptor, instance=None) -> list[dict]:
    """Weight zero: ``x = exp(-P(chi_0(a)))`` solves ``x = 1 - P(x a)`` and
    ``y = exp(P(chi_0(a)))`` solves ``y = 1 + P(a y)``; also ``x x' = 1``."""
    if P.weight != 0:
        raise ValueError("needs a weight-zero operator")
    omega = P(chi(a, P, ChiVariant.WEIGHT_ZERO, theta=0))
    x, y = exp(-omega), exp(omega)
    one = a.one()
    inst = instance or _instance(a, P)
    prob = SpitzerProblem(a, P)
    xl, xr = solve_left(prob), solve_right(prob)
    return [
        _report("weight-zero-left", inst, x - (one - P(x * a)), a.order),
        _report("weight-zero-right", inst, y - (one + P(a * y)), a.order),
        _report("atkinson-zero", inst, (one - P(xl * a)) * (one + P(a * xr)) - one, a.order),
        _report("weight-zero-solver", inst, xl - x, a.order),
    ]


def _instance(b, P):
    return {"algebra": type(b).__name__, "operator": P.name, "weight": encode(P.weight),
            "order": b.order}


__all__ = [
    "SpitzerProblem", "solve_left", "solve_right", "atkinson_check", "bogoliubov_pair",
    "star_exponential", "star_exponential_check", "nested_sum", "classical_spitzer_verify",
    "spitzer_theta_commutative_verify", "spitzer_theta_verify", "geometric_series_verify",
    "weight_zero_check",
]
