"""Even-odd and Birkhoff (counterterm/renormalized) factorizations of tree characters.

Birkhoff conventions: ``phi = phi_-^{-1} * phi_+`` with ``phi_-`` a pure pole
(``R phi_- = phi_- - e``) and ``phi_+`` pole free.  Three independent routes
compute it: the Spitzer fixed point with ``b = phi - e``, Bogoliubov's tree
recursion, and the exponential split of ``chi(log phi)``.
"""
from __future__ import annotations

from ..chi import ChiVariant, chi, chi_closed_involutive, odd_part_closed_form
from ..core import exp, inverse, iterate_fixed_point, log
from ..operators import OperatorDescriptor, double_exp
from ..spitzer import SpitzerProblem, solve_left, solve_right
from .functionals import (
    Functional, character, compose_antipode, parity_part, pi_minus, pole_lift,
)
from .trees import EMPTY, forest_degree, tree_coproduct, trees_up_to

BIRKHOFF_METHODS = ("spitzer", "bogoliubov", "exponential")


# -- even-odd -------------------------------------------------------------------------

def even_odd_decompose(phi: Functional, method: str = "fixed-point"):
    """``phi = phi_- * phi_+`` with ``phi_-`` odd and ``phi_+`` even.

    ``method="fixed-point"`` iterates chi with the odd-part projector;
    ``"closed-form"`` uses the closed expression for chi instead.
    """
    phi.require_character()
    Z = log(phi)
    if method == "fixed-point":
        X = chi(Z, pi_minus(), ChiVariant.TWO_SIDED)
    elif method == "closed-form":
        X = chi_closed_involutive(Z, pi_minus())
    else:
        raise ValueError(f"unknown method {method!r}")
    return exp(parity_part(X, True)), exp(parity_part(X, False))


def even_odd_chi(phi: Functional) -> dict:
    """Fixed-point chi of ``log phi`` next to both closed forms, for comparison."""
    phi.require_character()
    Z = log(phi)
    fixed = chi(Z, pi_minus())
    return {
        "Z": Z,
        "fixed_point": fixed,
        "closed_form": chi_closed_involutive(Z, pi_minus()),
        "odd_part": parity_part(fixed, True),
        "odd_part_closed_form": odd_part_closed_form(Z, pi_minus()),
    }


def is_odd_character(f: Functional) -> bool:
    """``f-bar = f^{-1}``, i.e. ``f-bar * f = e``."""
    from .functionals import grading_involution

    return grading_involution(f) * f == f.one()


def is_even(f: Functional) -> bool:
    return all(forest_degree(F) % 2 == 0 for F in f.values())


# -- Birkhoff -------------------------------------------------------------------------

def _lift(R: OperatorDescriptor | None) -> OperatorDescriptor:
    return pole_lift(R)


def birkhoff_decompose(phi: Functional, R: OperatorDescriptor | None = None,
                       method: str = "spitzer"):
    """``(phi_-, phi_+)`` with ``phi = phi_-^{-1} * phi_+``.

    ``R`` acts on target values (default: pole part) and is lifted to
    functionals by composition.
    """
    phi.require_character()
    lifted = _lift(R)
    if method == "spitzer":
        prob = SpitzerProblem(phi - phi.one(), lifted)
        return solve_left(prob), inverse(solve_right(prob))
    if method == "exponential":
        X = chi(log(phi), lifted)
        RX = lifted(X)
        return exp(-RX), exp(X - RX)
    if method == "bogoliubov":
        return bogoliubov_counterterm(phi, R)
    raise ValueError(f"unknown method {method!r}; expected one of {BIRKHOFF_METHODS}")


def _value_map(R: OperatorDescriptor | None):
    return (lambda v: v.pole_part()) if R is None else R.fn


def _bogoliubov_tables(phi: Functional, R: OperatorDescriptor | None):
    """Tree values of ``phi_-``, ``phi_+`` and the preparation ``R-bar`` by recursion on degree."""
    Rv = _value_map(R)
    target = phi.target
    minus, plus, prep = {}, {}, {}

    def minus_of(forest):
        out = target.one()
        for t in forest:
            out = out * minus[t]
        return out

    for t in trees_up_to(phi.max_degree):
        val = phi((t,))
        for left, right, m in tree_coproduct(t):
            if left and right:
                val = val + minus_of(left) * phi(right) * m
        prep[t] = val
        minus[t] = -Rv(val)
        plus[t] = val + minus[t]
    return minus, plus, prep


def bogoliubov_counterterm(phi: Functional, R: OperatorDescriptor | None = None):
    """``phi_-(T) = -R(phi(T) + sum phi_-(pruned) phi(trunk))`` and
    ``phi_+(T) = (id - R)(...)``, extended multiplicatively."""
    phi.require_character()
    minus, plus, _ = _bogoliubov_tables(phi, R)
    D, target = phi.max_degree, phi.target
    return character(minus, D, target), character(plus, D, target)


def preparation_map(phi: Functional, R: OperatorDescriptor | None = None) -> Functional:
    """Bogoliubov's preparation ``phi_- * (phi - e)``; on a tree it is the bracket
    ``phi(T) + sum phi_-(pruned) phi(trunk)`` of the counterterm recursion."""
    phi_minus, _ = bogoliubov_counterterm(phi, R)
    return phi_minus * (phi - phi.one())


def rbar_map(phi: Functional, R: OperatorDescriptor | None = None) -> Functional:
    """``exp^{*R}(-chi(log phi))`` in the double product of the lifted ``R``.

    It satisfies ``R~(rbar) = 2e - phi_+`` and ``R(rbar) = phi_- - e`` and
    equals ``e - preparation_map(phi)``.
    """
    phi.require_character()
    lifted = _lift(R)
    return double_exp(-chi(log(phi), lifted), lifted)


def phi_plus_direct(phi: Functional, R: OperatorDescriptor | None = None) -> Functional:
    """Fixed point of ``phi_+ = e - R~(phi_+ * (phi^{-1} - e))`` with ``phi^{-1} = phi o S``."""
    phi.require_character()
    lifted = _lift(R)
    e = phi.one()
    d = compose_antipode(phi) - e
    return iterate_fixed_point(lambda y: e - lifted.complement(y * d), e, phi.max_degree)


def is_pole_free(f: Functional) -> bool:
    return all(not v.pole_part() for v in f.values().values())


__all__ = [
    "even_odd_decompose", "even_odd_chi", "is_odd_character", "is_even",
    "birkhoff_decompose", "bogoliubov_counterterm", "preparation_map", "rbar_map",
    "phi_plus_direct", "is_pole_free", "BIRKHOFF_METHODS", "EMPTY",
]
