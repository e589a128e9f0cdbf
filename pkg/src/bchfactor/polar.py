"""Polar-type factorization ``exp(tZ) = exp(X_-(t)) exp(X_+(t))`` from one chi computation.

For an involution with fixed Lie subalgebra ``g_+`` and anti-fixed part
``g_-``, ``X_-(t) = pi_-(chi(tZ))`` and ``X_+(t) = pi_+(chi(tZ))`` where chi
uses ``P = pi_-``.  Two instances:

* symbolic: the free algebra on tagged letters ``Zm`` (odd) and ``Zp``
  (even), parity counted by ``Zm`` letters;
* matrix: ``d x d`` rational matrices with ``sigma(X) = -X^T``, so ``pi_-`` is
  the symmetric part and ``pi_+`` the antisymmetric part, as series in ``t``.
"""
from __future__ import annotations

import numpy as np

from .algebras import _matrix
from .algebras.matrixpoly import MatrixPolyFunction
from .chi import ChiVariant, chi
from .core import exp
from .errors import DegreeError
from .free_operated import FreeOperated, Generator, OperatedPolynomial
from .operators import (
    antisymmetric_part, parity_projector, symmetric_part,
    symmetric_projector,
)

SYMBOLIC_NAMES = ("Zm", "Zp")


def polar_algebra(order: int) -> FreeOperated:
    return FreeOperated(list(SYMBOLIC_NAMES), order, tags=["-", "+"])


def _check_order(order: int, cap: int | None = None) -> None:
    if order < 1:
        raise DegreeError("order must be at least 1")
    if cap is not None and order > cap:
        raise DegreeError(f"order {order} exceeds the truncation order {cap}")


def polar_series(Z=None, order: int = 3):
    """Return ``(X_minus, X_plus)``, lists whose entry ``k-1`` is the t^k coefficient.

    ``Z=None`` gives the symbolic terms in ``Zm``/``Zp``; a square matrix gives
    the matrix instance (coefficients are exact matrices).
    """
    _check_order(order)
    if Z is None:
        A = polar_algebra(order)
        Zm, Zp = A.gens
        X = chi(Zm + Zp, parity_projector("-"), ChiVariant.TWO_SIDED)
        odd = parity_projector("-")(X)
        even = parity_projector("+")(X)
        return ([odd.component(k) for k in range(1, order + 1)],
                [even.component(k) for k in range(1, order + 1)])
    Z = _matrix.as_matrix(Z)
    X = matrix_chi(Z, order)
    return ([symmetric_part(X.coefficient(k)) for k in range(1, order + 1)],
            [antisymmetric_part(X.coefficient(k)) for k in range(1, order + 1)])


def matrix_chi(Z: np.ndarray, order: int) -> MatrixPolyFunction:
    """``chi(tZ)`` with ``P`` = symmetric part, in ``M_d(Q)[t]`` truncated above ``t^order``."""
    d = Z.shape[0]
    return chi(MatrixPolyFunction({1: Z}, d, order), symmetric_projector(), ChiVariant.TWO_SIDED)


def as_series(coefficients, d: int, order: int) -> MatrixPolyFunction:
    return MatrixPolyFunction({k: m for k, m in enumerate(coefficients, start=1)}, d, order)


def recomposition_residual(Z: np.ndarray, X_minus, X_plus, order: int) -> MatrixPolyFunction:
    """``exp(X_-(t)) exp(X_+(t)) - exp(tZ)``; zero through ``t^order`` when correct."""
    Z = _matrix.as_matrix(Z)
    d = Z.shape[0]
    lhs = exp(as_series(X_minus, d, order)) * exp(as_series(X_plus, d, order))
    return lhs - exp(MatrixPolyFunction({1: Z}, d, order))


def instantiate(p: OperatedPolynomial, assignment: dict[str, np.ndarray]) -> np.ndarray:
    """Substitute matrices for the letters of a P-free polynomial."""
    d = next(iter(assignment.values())).shape[0]
    out = _matrix.zeros(d)
    for word, c in p.terms().items():
        m = _matrix.identity(d)
        for atom in word:
            if not isinstance(atom, Generator):
                raise ValueError("cannot instantiate words containing P")
            m = m.dot(assignment[atom.name])
        out = out + m * c
    return out


def split_matrix(Z: np.ndarray) -> dict[str, np.ndarray]:
    """``Zm = sym(Z)``, ``Zp = antisym(Z)``."""
    Z = _matrix.as_matrix(Z)
    return {"Zm": symmetric_part(Z), "Zp": antisymmetric_part(Z)}


def parity_closure_check(max_degree: int) -> bool:
    """Brackets of pure-parity words obey ``[g+-, g-+] in g-`` and ``[g+-, g+-] in g+``.

    Exhaustive over pairs of words in ``Zm``/``Zp`` with total degree <= max_degree.
    """
    from itertools import product

    A = polar_algebra(max_degree)
    gens = dict(zip(SYMBOLIC_NAMES, A.gens))
    odd, even = parity_projector("-"), parity_projector("+")
    words = []
    for n in range(1, max_degree):
        for letters in product(SYMBOLIC_NAMES, repeat=n):
            w = A.one()
            for l in letters:
                w = w * gens[l]
            words.append((w, letters.count("Zm") % 2))
    for x, px in words:
        for y, py in words:
            if x.degree + y.degree > max_degree:
                continue
            br = x * y - y * x
            target = odd if (px + py) % 2 else even
            if target(br) != br:
                return False
    return True


__all__ = [
    "polar_algebra", "polar_series", "matrix_chi", "recomposition_residual", "instantiate",
    "split_matrix", "parity_closure_check", "as_series", "SYMBOLIC_NAMES",
]
