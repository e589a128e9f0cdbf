from fractions import Fraction

import pytest

from bchfactor import FlagError, FreeOperated
from bchfactor.algebras import LaurentRing, MatrixPolyRing
from bchfactor.hopf import infinitesimal_character, pi_minus, pole_lift
from bchfactor.operators import (
    all_pass, check_idempotent, check_idempotent_structure, check_image_closure,
    check_modified_identity, check_multiplicative, check_rb_identity, coefficientwise_lift,
    double_exp, double_product, entrywise_lift, evaluation_morphism, first_failure,
    formal_p_operator, laurent_grid, lower_triangular_projector, modified_operator,
    parity_projector, pole_projection, require_multiplicative_idempotent,
    riemann_integral_operator,
)
from bchfactor.sampling import (
    random_adjoined, random_bivariate, random_laurent, random_matpoly, random_triangular, rng,
)


def pairs(items):
    return list(zip(items, items[1:] + items[:1]))


def test_pole_projection_exhaustive_grid():
    R = pole_projection()
    _, grid = laurent_grid(4)
    assert all_pass(check_rb_identity(R, grid))
    assert all_pass(check_modified_identity(R, grid))
    assert all_pass(check_image_closure(R, grid))
    assert all_pass(check_idempotent_structure(R, [x for x, _ in grid]))


def test_pole_projection_is_not_multiplicative():
    R = pole_projection()
    L = LaurentRing(2, 2)
    report = check_multiplicative(R, [(L.monomial(-2), L.monomial(1))])
    assert not all_pass(report)
    assert first_failure(report)["identity"] == "P(xy)=P(x)P(y)"
    with pytest.raises(FlagError):
        require_multiplicative_idempotent(R, [L.one()])


def test_entrywise_and_coefficientwise_lifts():
    gen = rng(2)
    ring = LaurentRing(6, 6)
    R = pole_projection()
    tri = [random_triangular(gen, 4, ring) for _ in range(4)]
    adj = [random_adjoined(gen, ring, 3, lambda g, k: random_laurent(g, ring, k)) for _ in range(4)]
    assert all_pass(check_rb_identity(entrywise_lift(R), pairs(tri)))
    assert all_pass(check_rb_identity(coefficientwise_lift(R), pairs(adj)))


def test_riemann_integral_weight_zero():
    gen = rng(4)
    I = riemann_integral_operator()
    assert I.weight == 0
    samples = [random_matpoly(gen, 2, 5, min_degree=0, max_degree=2) for _ in range(5)]
    assert all_pass(check_rb_identity(I, pairs(samples)))
    assert all_pass(check_modified_identity(I, pairs(samples)))


def test_evaluation_is_multiplicative_idempotent():
    gen = rng(6)
    ring = MatrixPolyRing(2, 2)
    E = coefficientwise_lift(evaluation_morphism())
    samples = [random_adjoined(gen, ring, 3, lambda g, k: random_matpoly(g, 2, 2, min_degree=0))
               for _ in range(4)]
    require_multiplicative_idempotent(E, samples)
    assert all_pass(check_rb_identity(E, pairs(samples)))
    assert all_pass(check_idempotent_structure(E, samples))


def test_lower_triangular_projector_on_bivariate():
    gen = rng(8)
    P = lower_triangular_projector()
    samples = [random_bivariate(gen, 3, 3) for _ in range(5)]
    assert all_pass(check_rb_identity(P, pairs(samples)))
    assert all_pass(check_idempotent(P, samples))
    assert all_pass(check_image_closure(P, pairs(samples)))


def test_formal_operator_satisfies_no_relation():
    A = FreeOperated("x y", order=3)
    P = formal_p_operator()
    report = check_rb_identity(P, [(A["x"], A["y"])])
    assert not all_pass(report)


def test_parity_projectors_split_identity():
    A = FreeOperated(["Zm", "Zp"], order=4, tags=["-", "+"])
    Zm, Zp = A.gens
    odd, even = parity_projector("-"), parity_projector("+")
    x = Zm + Zp + Zm * Zp + Zm * Zm * Zp
    assert odd(x) + even(x) == x
    assert odd(x) == Zm + Zm * Zp
    assert odd(odd(x)) == odd(x)


def test_double_product_and_exponential():
    R = pole_projection()
    L = LaurentRing(4, 4)
    a, b = L({-1: 1, 1: 2}), L({-1: 3, 0: 1})
    assert double_product(a, b, R) == R(a) * b + a * R(b) - a * b
    assert R(double_product(a, b, R)) == R(a) * R(b)
    M = modified_operator(R)
    assert M(M(a)) == a


def test_double_exp_first_terms():
    gen = rng(12)
    ring = LaurentRing(6, 6)
    R = entrywise_lift(pole_projection())
    a = random_triangular(gen, 3, ring)
    second = double_product(a, a, R) / 2
    assert double_exp(a, R) == a.one() + a + second


def test_pi_minus_on_hopf_is_not_rota_baxter():
    P = pi_minus()
    Z = infinitesimal_character({"*": 1}, 3)
    report = check_rb_identity(P, [(Z, Z)], lie=False)
    assert not report[0]["pass"]
    assert all_pass(check_idempotent(P, [Z, Z * Z]))


def test_pole_lift_on_functionals_is_rota_baxter():
    R = pole_lift()
    L = LaurentRing(3, 3)
    Z = infinitesimal_character({"*": L({-1: 1, 0: 2}), "*[*]": L({-1: Fraction(1, 2), 1: 1})}, 3, L)
    W = infinitesimal_character({"*": L({0: 1, -1: -1})}, 3, L)
    assert all_pass(check_rb_identity(R, [(Z, W), (W, Z)], lie=False))
