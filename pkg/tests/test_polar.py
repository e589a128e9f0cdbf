import pytest

from bchfactor import DegreeError, exp
from bchfactor.algebras import MatrixPolyFunction
from bchfactor.operators import antisymmetric_part, symmetric_part
from bchfactor.polar import (
    as_series, instantiate, parity_closure_check, polar_algebra, polar_series,
    recomposition_residual, split_matrix,
)
from bchfactor.sampling import random_matrix, rng

from oracles import frac_matrix

STATED = {
    ("-", 1): "Zm", ("+", 1): "Zp",
    ("-", 2): "-1/2*[Zm,Zp]", ("+", 2): "0",
    ("-", 3): "-1/6*[Zp,[Zm,Zp]]",
}


@pytest.fixture(scope="module")
def terms():
    return polar_series(order=3)


@pytest.mark.parametrize("key", sorted(STATED))
def test_stated_terms(terms, key):
    side, k = key
    A = polar_algebra(3)
    computed = terms[0 if side == "-" else 1][k - 1]
    assert computed == A.normalize(STATED[key])


def test_even_cubic_term(terms):
    assert terms[1][2] == polar_algebra(3).normalize("-1/12*[Zm,[Zm,Zp]]")


@pytest.mark.xfail(strict=True, reason="sign of the even cubic term is opposite to the stated one")
def test_even_cubic_term_as_stated(terms):
    assert terms[1][2] == polar_algebra(3).normalize("1/12*[Zm,[Zm,Zp]]")


@pytest.mark.parametrize("seed", range(3))
def test_matrix_recomposition_and_instantiation(seed):
    Z = random_matrix(rng(seed), 3)
    Xm, Xp = polar_series(Z, order=5)
    assert recomposition_residual(Z, Xm, Xp, 5).is_zero()
    for m in Xm:
        assert (m == m.T).all()
    for m in Xp:
        assert (m == -m.T).all()
    sym_m, sym_p = polar_series(order=5)
    assignment = split_matrix(Z)
    for k in range(5):
        assert (instantiate(sym_m[k], assignment) == Xm[k]).all()
        assert (instantiate(sym_p[k], assignment) == Xp[k]).all()


def test_symmetric_input_has_trivial_even_part():
    Z = frac_matrix([[1, 2, 0], [2, -1, 3], [0, 3, 2]])
    Xm, Xp = polar_series(Z, order=4)
    assert (Xm[0] == Z).all()
    assert all((m == 0).all() for m in Xm[1:] + Xp)


def test_split_matrix():
    Z = frac_matrix([[1, 2], [0, 3]])
    parts = split_matrix(Z)
    assert (parts["Zm"] + parts["Zp"] == Z).all()
    assert (parts["Zm"] == symmetric_part(Z)).all() and (parts["Zp"] == antisymmetric_part(Z)).all()


def test_order_validation():
    with pytest.raises(DegreeError):
        polar_series(order=0)


def test_parity_closure_exhaustive():
    assert parity_closure_check(5)


def test_series_helper():
    Z = frac_matrix([[0, 1], [-1, 0]])
    s = as_series([Z], 2, 3)
    assert s == MatrixPolyFunction({1: Z}, 2, 3)
    assert (exp(s).coefficient(2) == Z.dot(Z) / 2).all()
