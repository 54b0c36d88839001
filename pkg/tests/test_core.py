import pytest
from hypothesis import given
from hypothesis import strategies as st

from superlie import Alphabet, AssocPoly, LiePoly, LieTerm, Parity, StructuralError
from superlie.core import (
    bracket_terms,
    multidegree,
    parity_of,
    render_assocpoly,
    render_liepoly,
    render_term,
    sign,
    weight_of,
)

from conftest import alphabets, trees


@pytest.fixture
def ab():
    return Alphabet([("a", "even"), ("b", "even")])


def test_parity_arithmetic():
    assert Parity.ODD + Parity.ODD == Parity.EVEN
    assert Parity.EVEN + Parity.ODD == Parity.ODD
    assert isinstance(Parity.ODD + 1, Parity)
    assert sign(1, 1) == -1 and sign(0, 1) == 1 and sign(0, 0) == 1


def test_parity_examples():
    al = Alphabet([("x", 0), ("y", 1)])
    x, y = al.leaf("x"), al.leaf("y")
    assert parity_of(y, al) == Parity.ODD
    assert parity_of(LieTerm.node(y, y), al) == Parity.EVEN
    assert parity_of(bracket_terms(y, x, y), al) == Parity.EVEN


def test_parity_of_rejects_foreign_leaf():
    al = Alphabet([("x", 0)])
    with pytest.raises(StructuralError):
        parity_of(LieTerm.leaf(3, 0), al)


def test_weight_examples(ab):
    a, b = ab.leaf("a"), ab.leaf("b")
    assert weight_of(a) == 1
    assert weight_of(LieTerm.node(b, a)) == 2
    ba = LieTerm.node(b, a)
    assert weight_of(LieTerm.node(ba, ba)) == 4


def test_multidegree(ab):
    assert multidegree((1, 0, 1, 0), ab) == (2, 2)
    assert multidegree((0, 0, 0), ab) == (3, 0)
    assert multidegree((), ab) == (0, 0)


@pytest.mark.parametrize("bad", [[], [("a", 0), ("a", 1)], [("a b", 0)], [("[a", 0)], [("a", 2)]])
def test_alphabet_validation(bad):
    with pytest.raises(ValueError):
        Alphabet(bad)


@given(st.data())
def test_tree_invariants(data):
    al = data.draw(alphabets())
    t = data.draw(trees(al, 6))
    assert t.weight == len(t.labels())
    assert t.parity == parity_of(t, al)
    if not t.is_leaf:
        assert t.parity == (t.left.parity + t.right.parity)
        assert t.weight == t.left.weight + t.right.weight


def test_term_order_is_weight_first(ab):
    a, b = ab.leaf("a"), ab.leaf("b")
    assert a < b < LieTerm.node(a, b) < LieTerm.node(b, a)
    assert LieTerm.node(b, a) < bracket_terms(a, a, a)


def test_lincomb_drops_zeros(ab):
    a, b = ab.leaf("a"), ab.leaf("b")
    p = LiePoly([(a, 2), (b, 1)])
    q = LiePoly([(a, 2), (b, -1)])
    assert dict(p - q) == {b: 2}
    assert not (p - p)
    assert (p - p) == 0
    assert 0 * p == LiePoly()
    assert LiePoly([(a, 1), (a, -1)]) == LiePoly()


def test_assoc_product():
    x = AssocPoly.word((0,))
    y = AssocPoly.word((1,))
    assert dict((x + y) * (x - y)) == {(0, 0): 1, (0, 1): -1, (1, 0): 1, (1, 1): -1}
    assert AssocPoly.one() * x == x


def test_rendering(ab):
    a, b = ab.leaf("a"), ab.leaf("b")
    t = bracket_terms(b, a, a)
    assert render_term(t, ab.name) == "[b,a,a]"
    ba = LieTerm.node(b, a)
    assert render_term(LieTerm.node(a, ba), ab.name) == "[a,[b,a]]"
    assert render_term(LieTerm.node(ba, ba), ab.name) == "[b,a,[b,a]]"
    assert render_liepoly(LiePoly([(t, -1), (ba, 3)]), ab) == "3*[b,a] - [b,a,a]"
    assert render_assocpoly(AssocPoly([((1, 0), 1), ((0, 1), -1)]), ab) == "-ab + ba"


def test_multichar_word_rendering():
    al = Alphabet([("x1", 0), ("x2", 1)])
    assert render_assocpoly(AssocPoly.word((1, 0)), al) == "x2·x1"
