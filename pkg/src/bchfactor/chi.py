"""The BCH-recursion map chi and the factorizations built on it.

For a filtration-preserving linear map ``P`` with complement ``P~ = id - P``
the map ``chi`` is the unique solution of ``C(P(chi(a)), P~(chi(a))) = a``,
so that ``exp(a) = exp(P(chi(a))) exp(P~(chi(a)))``.  Every variant is a
fixed-point iteration that gains one filtration degree per step.
"""
from __future__ import annotations

from enum import Enum

from .core import (
    FilteredElement, _require_positive_degree, as_rational, bch, bernoulli, c_product,
    commutator, exp, iterate_fixed_point, log,
)
from .errors import DegreeError, FlagError, MembershipError
from .operators import OperatorDescriptor, require_multiplicative_idempotent, riemann_integral_operator


class ChiVariant(Enum):
    """Which recursion to iterate.

    ``TWO_SIDED``: ``chi = a - BCH(P chi, P~ chi)``;
    ``ONE_SIDED``: ``chi = a + BCH(-P chi, a)``;
    ``WEIGHT_THETA``: ``chi = a + BCH(-P chi, theta a) / theta`` with ``P~ = theta id - P``;
    ``WEIGHT_ZERO``: ``chi = (1 + sum_n b_n ad(P chi)^n)(a)`` with Bernoulli ``b_n``.
    """

    TWO_SIDED = "two-sided"
    ONE_SIDED = "one-sided"
    WEIGHT_THETA = "weight-theta"
    WEIGHT_ZERO = "weight-zero"


def complement(a, P: OperatorDescriptor):
    """``P~(a) = a - P(a)``, the complement used by the weight-free recursions."""
    return a - P(a)


def chi(a: FilteredElement, P: OperatorDescriptor, variant: ChiVariant = ChiVariant.TWO_SIDED,
        theta=None) -> FilteredElement:
    """Fixed point of the chosen recursion, exact at the truncation order of ``a``.

    ``theta`` defaults to the operator weight and only matters for the
    weight variants.  ``WEIGHT_ZERO`` accepts a degree-0 ``a`` when ``P``
    raises degrees (``P.degree_shift >= 1``), as for the Riemann integral.
    """
    variant = ChiVariant(variant)
    theta = P.weight if theta is None else as_rational(theta)
    steps = a.order

    if variant is ChiVariant.WEIGHT_ZERO:
        if theta != 0:
            raise ValueError("the weight-zero recursion needs theta = 0")
        if a.degree + P.degree_shift < 1:
            raise DegreeError("chi_0 needs deg(a) + shift(P) >= 1")
        return iterate_fixed_point(lambda c: weight_zero_step(a, P(c)), a, steps)

    _require_positive_degree(a, "chi")
    if variant is ChiVariant.TWO_SIDED:
        step = lambda c: a - bch(P(c), c - P(c))  # noqa: E731
    elif variant is ChiVariant.ONE_SIDED:
        step = lambda c: a + bch(-P(c), a)  # noqa: E731
    else:
        if theta == 0:
            raise ValueError("the weight-theta recursion needs theta != 0")
        step = lambda c: a + bch(-P(c), a * theta) / theta  # noqa: E731
    return iterate_fixed_point(step, a, steps)


def chi_theta_two_sided(a: FilteredElement, P: OperatorDescriptor, theta=None) -> FilteredElement:
    """Cross-check form ``chi_theta = a - BCH(P chi, P~_theta chi) / theta``."""
    theta = P.weight if theta is None else as_rational(theta)
    if theta == 0:
        raise ValueError("the weight-theta recursion needs theta != 0")
    _require_positive_degree(a, "chi")
    return iterate_fixed_point(
        lambda c: a - bch(P(c), c * theta - P(c)) / theta, a, a.order
    )


def weight_zero_step(a, x):
    """``(1 + sum_{n>0} b_n ad(x)^n)(a)``; the sum stops once ``ad(x)^n(a)`` vanishes."""
    out = a
    term = a
    for n in range(1, a.order + 1):
        term = commutator(x, term)
        if term.is_zero():
            break
        b = bernoulli(n)
        if b:
            out = out + term * b
    return out


def chi_inverse(a: FilteredElement, P: OperatorDescriptor) -> FilteredElement:
    """``C(P(a), P~(a))``."""
    return c_product(P(a), complement(a, P))


def factorize_exponential(a: FilteredElement, P: OperatorDescriptor,
                          variant: ChiVariant = ChiVariant.TWO_SIDED):
    """``D_P(a) = (P(chi(a)), P~(chi(a)))`` so that ``exp(a) = exp(g_-) exp(g_+)``."""
    g = chi(a, P, variant)
    return P(g), complement(g, P)


def chi_closed_multiplicative(u: FilteredElement, P: OperatorDescriptor, samples=None) -> FilteredElement:
    """``chi(u) = u + BCH(-P(u), u)`` for an idempotent algebra morphism ``P``.

    ``P`` must claim both properties and pass them on ``samples``
    (default: ``u``, ``P(u)`` and ``u^2``), else :class:`FlagError`.
    """
    require_multiplicative_idempotent(P, samples if samples is not None else [u, P(u), u * u])
    return u + bch(-P(u), u)


def simple_factorization(a: FilteredElement, P: OperatorDescriptor):
    """``(P(a), P~(a) + BCH(-P(a), a))``: the exponent pair for a multiplicative idempotent ``P``."""
    return P(a), complement(a, P) + bch(-P(a), a)


def _require_idempotent(P: OperatorDescriptor):
    if not P.claims_idempotent:
        raise FlagError(f"operator {P.name} is not flagged idempotent")


def decompose_group_element(eta: FilteredElement, P: OperatorDescriptor):
    """``eta = eta_- eta_+`` with ``log eta_-`` in im P and ``log eta_+`` in im P~."""
    _require_idempotent(P)
    g_minus, g_plus = factorize_exponential(log(eta), P)
    if P(g_minus) != g_minus or P(g_plus) != 0:
        raise FlagError(f"operator {P.name} is not idempotent on this input")
    return exp(g_minus), exp(g_plus)


def uniformize(a_plus: FilteredElement, a_minus: FilteredElement, P: OperatorDescriptor):
    """``Psi(a_+, a_-) = (P(chi(C(a_+, a_-))), P~(chi(C(a_+, a_-))))``.

    Rewrites ``exp(a_+) exp(a_-)`` as ``exp(psi_-) exp(psi_+)``.  Inputs
    must lie in ``im P~`` (``a_plus``) and ``im P`` (``a_minus``).
    """
    _require_idempotent(P)
    if P(a_minus) != a_minus:
        raise MembershipError("a_minus is not in the image of P")
    if P(a_plus) != 0:
        raise MembershipError("a_plus is not in the image of P~")
    if a_plus.is_zero() or a_minus.is_zero():
        return a_minus, a_plus
    return factorize_exponential(c_product(a_plus, a_minus), P)


def magnus_omega(a: FilteredElement, P: OperatorDescriptor | None = None, order: int | None = None):
    """``Omega[a] = P(chi_0(a))`` for a weight-zero ``P`` (default: Riemann integral).

    ``order`` keeps the components of filtration degree <= order.
    """
    P = riemann_integral_operator() if P is None else P
    omega = P(chi(a, P, ChiVariant.WEIGHT_ZERO, theta=0))
    if order is None or order >= a.order:
        return omega
    return truncate_degree(omega, order)


def truncate_degree(x: FilteredElement, order: int) -> FilteredElement:
    """Drop components of filtration degree above ``order`` (same ambient algebra)."""
    from .algebras.matrixpoly import MatrixPolyFunction
    from .free_operated import OperatedPolynomial

    if isinstance(x, MatrixPolyFunction):
        return MatrixPolyFunction({k: m for k, m in x.coefficients().items() if k <= order}, x.d, x.q)
    if isinstance(x, OperatedPolynomial):
        out = x.zero()
        for d, comp in x.components().items():
            if d <= order:
                out = out + comp
        return out
    raise TypeError(f"no degree truncation for {type(x).__name__}")


def chi_closed_involutive(Z: FilteredElement, pi_minus: OperatorDescriptor) -> FilteredElement:
    """Closed form of chi for the projector ``pi_-`` of an involutive algebra automorphism.

    ``chi(Z) = Z + BCH(-pi_-(Z) - 1/2 BCH(Z, 2 pi_-(Z) - Z), Z)``.
    """
    zm = pi_minus(Z)
    return Z + bch(-zm - bch(Z, zm * 2 - Z) / 2, Z)


def odd_part_closed_form(Z: FilteredElement, pi_minus: OperatorDescriptor) -> FilteredElement:
    """``pi_-(chi(Z)) = pi_-(Z) + 1/2 BCH(Z, pi_-(Z) - pi_+(Z))``."""
    zm = pi_minus(Z)
    return zm + bch(Z, zm - (Z - zm)) / 2


def chi_components(a: FilteredElement, P: OperatorDescriptor,
                   variant: ChiVariant = ChiVariant.TWO_SIDED) -> dict[int, FilteredElement]:
    """Homogeneous components ``{degree: chi^(degree-1)(a)}`` of chi on a graded input."""
    return chi(a, P, variant).components()


__all__ = [
    "ChiVariant", "chi", "chi_theta_two_sided", "chi_inverse", "factorize_exponential",
    "chi_closed_multiplicative", "simple_factorization", "decompose_group_element",
    "uniformize", "magnus_omega", "chi_closed_involutive", "odd_part_closed_form",
    "weight_zero_step", "complement", "truncate_degree", "chi_components",
]
