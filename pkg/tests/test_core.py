from fractions import Fraction

import pytest

from bchfactor import (
    DegreeError, FreeOperated, NonConvergence, bch, bernoulli, commutator, exp, inverse,
    iterate_fixed_point, log,
)
from bchfactor.algebras import LaurentRing, TriangularMatrix
from bchfactor.core import as_rational, c_product, format_rational
from bchfactor.polar import instantiate
from bchfactor.sampling import random_triangular, rng

from oracles import bernoulli_by_division, nilpotent_exp, nilpotent_log, strict_upper


def test_bernoulli_leading_values():
    assert [bernoulli(n) for n in range(1, 5)] == [Fraction(-1, 2), Fraction(1, 12), 0, Fraction(-1, 720)]


def test_bernoulli_matches_series_division():
    expected = bernoulli_by_division(14)
    assert [bernoulli(n) for n in range(15)] == expected


def test_bernoulli_rejects_negative_index():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_as_rational_and_format():
    assert as_rational("3/6") == Fraction(1, 2)
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert format_rational(Fraction(3)) == "3"


@pytest.fixture
def x_y():
    A = FreeOperated("x y", order=4)
    return A, A["x"], A["y"]


def test_bch_through_degree_four(x_y):
    A, x, y = x_y
    expected = A.normalize("1/2*[x,y] + 1/12*[x,[x,y]] - 1/12*[y,[x,y]] - 1/24*[x,[y,[x,y]]]")
    assert bch(x, y) == expected


def test_bch_of_commuting_elements_vanishes(x_y):
    _, x, _ = x_y
    assert bch(x, x * 3).is_zero()
    assert c_product(x, -x).is_zero()


def test_bch_against_nilpotent_matrix_oracle():
    """BCH(x,y) in degree <= 4 instantiated on 5x5 strictly upper matrices equals
    log(exp X exp Y) - X - Y computed by finite matrix series."""
    A = FreeOperated("x y", order=4)
    symbolic = bch(A["x"], A["y"])
    gen = rng(7)
    for _ in range(5):
        X, Y = strict_upper(gen, 5), strict_upper(gen, 5)
        oracle = nilpotent_log(nilpotent_exp(X).dot(nilpotent_exp(Y))) - X - Y
        assert (instantiate(symbolic, {"x": X, "y": Y}) == oracle).all()


def test_exp_log_inverse_on_triangular_laurent():
    ring = LaurentRing(4, 4)
    gen = rng(3)
    for _ in range(5):
        a = random_triangular(gen, 4, ring)
        u = exp(a)
        assert log(u) == a
        assert u * inverse(u) == u.one()
        assert inverse(u) == exp(-a)


def test_exp_requires_positive_degree():
    A = FreeOperated("x", order=3)
    with pytest.raises(DegreeError):
        exp(A.one())
    with pytest.raises(DegreeError):
        log(A["x"])


def test_commutator_is_antisymmetric(x_y):
    _, x, y = x_y
    assert commutator(x, y) == -commutator(y, x)


def test_iterate_fixed_point_detects_non_stationary_step():
    A = FreeOperated("x", order=3)
    with pytest.raises(NonConvergence):
        iterate_fixed_point(lambda z: z + A.one(), A.zero(), 3)
    x = A["x"]
    assert iterate_fixed_point(lambda z: x + z * x, x, 3) == x + x * x + x * x * x


def test_triangular_filtration_degree():
    m = TriangularMatrix.unit(2, 0, 3)
    assert m.degree == 2
    assert (m * m).is_zero()
