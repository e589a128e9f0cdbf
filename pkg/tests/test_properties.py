from fractions import Fraction

from hypothesis import given, settings, strategies as st

from bchfactor import FreeOperated, SpitzerProblem, bch, chi, exp, log, solve_left, solve_right
from bchfactor.algebras import LaurentRing, TriangularMatrix
from bchfactor.chi import ChiVariant
from bchfactor.hopf import character, compose_antipode, counit, grading_involution, trees_up_to
from bchfactor.operators import entrywise_lift, pole_projection

PROFILE = settings(max_examples=25, deadline=None)

fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 5))
RING = LaurentRing(6, 6)
N = 4


@st.composite
def laurent(draw, span):
    exps = draw(st.lists(st.integers(-span, span), min_size=1, max_size=2, unique=True))
    return RING({k: draw(fractions) for k in exps})


@st.composite
def triangular(draw):
    entries = {(i, j): draw(laurent(i - j)) for i in range(N) for j in range(i)}
    return TriangularMatrix(entries, N, RING)


R = entrywise_lift(pole_projection())


@PROFILE
@given(triangular())
def test_exp_log_round_trip(a):
    assert log(exp(a)) == a


@PROFILE
@given(triangular())
def test_defining_identity(a):
    x = chi(a, R)
    assert exp(R(x)) * exp(R.complement(x)) == exp(a)


@PROFILE
@given(triangular())
def test_variants_agree(a):
    base = chi(a, R)
    assert chi(a, R, ChiVariant.ONE_SIDED) == base
    assert chi(a, R, ChiVariant.WEIGHT_THETA) == base


@PROFILE
@given(triangular())
def test_atkinson(b):
    prob = SpitzerProblem(b, R)
    assert solve_left(prob) * (b + 1) * solve_right(prob) == b.one()


@PROFILE
@given(laurent(3), laurent(3))
def test_pole_projection_rota_baxter(x, y):
    P = pole_projection()
    assert P(x) * P(y) + P(x * y) == P(P(x) * y + x * P(y))


WORDS = FreeOperated("x y z", order=4)
letters = st.sampled_from(WORDS.gens)


@st.composite
def lie_element(draw):
    a, b = draw(letters), draw(letters)
    return a * draw(fractions) + (a * b - b * a) * draw(fractions)


@PROFILE
@given(lie_element(), lie_element(), lie_element())
def test_jacobi(x, y, z):
    br = lambda u, v: u * v - v * u  # noqa: E731
    assert (br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))).is_zero()


@PROFILE
@given(st.lists(letters, min_size=1, max_size=4), st.randoms(use_true_random=False))
def test_reassociation_is_canonical(factors, random):
    def associate(items):
        if len(items) == 1:
            return items[0]
        cut = random.randint(1, len(items) - 1)
        return associate(items[:cut]) * associate(items[cut:])

    assert associate(factors) == associate(list(factors))


@PROFILE
@given(lie_element(), lie_element())
def test_bch_antisymmetry_under_negation(x, y):
    assert bch(-y, -x) == -bch(x, y)


D = 4
tree_values = st.fixed_dictionaries({t: fractions for t in trees_up_to(D)})


@PROFILE
@given(tree_values, tree_values)
def test_character_group(u, v):
    phi, psi = character(u, D), character(v, D)
    assert phi * compose_antipode(phi) == counit(D)
    assert (phi * psi).is_character()
    assert grading_involution(phi * psi) == grading_involution(phi) * grading_involution(psi)
