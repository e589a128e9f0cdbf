"""Seeded random exact inputs shared by tests, checkers and the CLI."""
from __future__ import annotations

import os
from fractions import Fraction

import numpy as np

DEFAULT_SEED = 0


def resolve_seed(seed: int | None = None) -> int:
    """``BCHFACTOR_SEED`` from the environment wins over the given seed."""
    env = os.environ.get("BCHFACTOR_SEED")
    if env is not None and env.strip():
        return int(env)
    return DEFAULT_SEED if seed is None else seed


def rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_rational(gen: np.random.Generator, nonzero: bool = False) -> Fraction:
    """Numerator in [-3, 3], denominator in [1, 3]."""
    while True:
        v = Fraction(int(gen.integers(-3, 4)), int(gen.integers(1, 4)))
        if v or not nonzero:
            return v


def random_matrix(gen: np.random.Generator, d: int) -> np.ndarray:
    m = np.empty((d, d), dtype=object)
    for i in range(d):
        for j in range(d):
            m[i, j] = random_rational(gen)
    return m


# -- random elements of the concrete algebras ---------------------------------------
# Laurent coefficients attached to filtration degree k use exponents in [-k, k]:
# any product of total degree <= N then stays inside the caps (N, N), so the
# truncation above eps^q never fires and identities hold exactly.

def random_laurent(gen, ring, span: int, terms: int = 2):
    coeffs = {}
    for _ in range(terms):
        k = int(gen.integers(-span, span + 1))
        coeffs[k] = coeffs.get(k, 0) + random_rational(gen)
    return ring(coeffs)


def random_triangular(gen, n: int, ring, strict: bool = True, density: float = 0.7):
    """Random lower triangular matrix; Laurent entries on band k use exponents in [-k, k]."""
    from .algebras.laurent import LaurentRing
    from .algebras.triangular import TriangularMatrix

    entries = {}
    for i in range(n):
        for j in range(i):
            if gen.random() > density:
                continue
            k = i - j
            if isinstance(ring, LaurentRing):
                entries[(i, j)] = random_laurent(gen, ring, k)
            else:
                entries[(i, j)] = random_rational(gen)
    if not strict:
        for i in range(n):
            entries[(i, i)] = random_rational(gen)
    return TriangularMatrix(entries, n, ring)


def random_matpoly(gen, d: int, q: int, min_degree: int = 1, max_degree: int | None = None):
    from .algebras.matrixpoly import MatrixPolyFunction

    top = q if max_degree is None else max_degree
    return MatrixPolyFunction(
        {k: random_matrix(gen, d) for k in range(min_degree, top + 1)}, d, q
    )


def random_bivariate(gen, d: int, order: int, s_min: int = 0, t_min: int = 0, project=None):
    """Random series; ``s_min``/``t_min`` force divisibility by s/t, ``project`` maps coefficients."""
    from .algebras.bivariate import BivariateMatrixSeries

    coeffs = {}
    for i in range(order + 1):
        for j in range(order + 1 - i):
            if i + j == 0 or i < s_min or j < t_min or gen.random() > 0.6:
                continue
            m = random_matrix(gen, d)
            coeffs[(i, j)] = project(m) if project else m
    return BivariateMatrixSeries(coeffs, d, order)


def random_adjoined(gen, ring, order: int, coefficient, min_degree: int = 1):
    """``sum_{k >= min_degree} coefficient(gen, k) t^k``."""
    from .algebras.adjoined import AdjoinedSeries

    return AdjoinedSeries({k: coefficient(gen, k) for k in range(min_degree, order + 1)}, ring, order)


def random_operated(gen, algebra, max_degree: int, terms: int = 4, with_p: bool = True):
    """Random element of degree >= 1 built from generators, products and P."""
    from .free_operated import formal_p

    gens = algebra.gens

    def atom(budget):
        if with_p and budget >= 1 and gen.random() < 0.35:
            return formal_p(word(int(gen.integers(1, budget + 1))))
        return gens[int(gen.integers(0, len(gens)))]

    def word(budget):
        out = algebra.one()
        used = 0
        while used < budget:
            a = atom(budget - used)
            if a.degree > budget - used:
                break
            out = out * a
            used += a.degree
        return out

    x = algebra.zero()
    for _ in range(terms):
        x = x + word(int(gen.integers(1, max_degree + 1))) * random_rational(gen, nonzero=True)
    if x.is_zero():
        x = gens[0]
    return x
