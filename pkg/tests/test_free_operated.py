from fractions import Fraction

import pytest

from bchfactor import FreeOperated, NotLieError, TruncationMismatch, formal_p, format_lie, lie_bracket
from bchfactor.brackets import right_normed
from bchfactor.free_operated import count_tag, word_degree


@pytest.fixture
def A():
    return FreeOperated("x y", order=4)


def test_product_and_truncation(A):
    x, y = A.gens
    assert str(x * y - y * x) == "x.y - y.x"
    assert (x * x * x * x * x).is_zero()
    assert (x * y * x).degree == 3


def test_raw_text_round_trip(A):
    p = A.normalize("P(2*x + y)*x - [x, P(x)]/2 + 3")
    assert A.parse(str(p)) == p


def test_normalize_expands_commutators(A):
    x, y = A.gens
    assert A.normalize("[x, y]") == x * y - y * x
    assert A.normalize("[x, [x, y]]") == x * (x * y - y * x) - (x * y - y * x) * x
    assert A.normalize("x**2") == x * x


def test_formal_p_is_linear_and_free(A):
    x, y = A.gens
    assert formal_p(x * 2 + y) == formal_p(x) * 2 + formal_p(y)
    assert formal_p(x) * formal_p(y) != formal_p(formal_p(x) * y + x * formal_p(y) + x * y)


def test_coefficients_are_fractions(A):
    x, y = A.gens
    p = x * Fraction(1, 3) + y
    assert all(type(c) is Fraction for c in p.terms().values())
    assert p.coefficient(next(iter(x.terms()))) == Fraction(1, 3)


def test_components_split_by_degree(A):
    x, y = A.gens
    p = x + x * y + y * y * y
    assert sorted(p.components()) == [1, 2, 3]
    assert p.component(2) == x * y


def test_mixed_orders_rejected(A):
    B = FreeOperated("x y", order=3)
    with pytest.raises(TruncationMismatch):
        A["x"] + B["x"]
    with pytest.raises(TruncationMismatch):
        lie_bracket(A["x"], B["y"])


def test_format_lie_right_normed(A):
    x, y = A.gens
    p = A.normalize("1/2*[x,y] - 1/12*[y,[x,y]]")
    assert format_lie(p) == "1/2*[x,y] - 1/12*[y,[x,y]]"
    assert A.normalize(format_lie(p)) == p
    assert right_normed is not None


def test_format_lie_rejects_non_lie(A):
    x, y = A.gens
    with pytest.raises(NotLieError):
        format_lie(x * y)


def test_tags_and_word_degree():
    A = FreeOperated(["Zm", "Zp"], order=3, tags=["-", "+"])
    Zm, Zp = A.gens
    word = next(iter((Zm * formal_p(Zm * Zp)).terms()))
    assert count_tag(word, "-") == 2
    assert count_tag(word, "+") == 1
    assert word_degree(word) == 3


def test_json_form(A):
    x, y = A.gens
    data = (x * y * Fraction(-2, 3)).to_json()
    assert data["order"] == 4
    assert data["terms"] == [["x.y", "-2/3"]]
