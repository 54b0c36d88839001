import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superlie import Alphabet, CapacityError, DomainError, LiePoly, LieTerm, parse_expression
from superlie.assoc import expand
from superlie.core import render_liepoly, term_multidegree
from superlie.hall import super_basis
from superlie.reduce import bracket, check_axioms, left_normalize, normal_form

from conftest import alphabets, random_alphabet, random_poly, trees


def P(s, al):
    return parse_expression(s, al)


def nf_text(expr, spec, weight=None):
    al = Alphabet(spec)
    p = P(expr, al)
    return normal_form(p, al, super_basis(al, weight or max(p.weight(), 1))).render()


def test_bracket_is_formal_and_bilinear():
    al = Alphabet([("a", 0), ("b", 0), ("c", 0)])
    a, b, c = (al.leaf(n) for n in "abc")
    assert bracket(LiePoly.of(a), LiePoly.of(b)) == LiePoly.of(LieTerm.node(a, b))
    assert bracket(LiePoly.of(a, 2), LiePoly.of(b, 3)) == LiePoly.of(LieTerm.node(a, b), 6)
    assert bracket(LiePoly([(a, 1), (b, 1)]), LiePoly.of(c)) == LiePoly(
        [(LieTerm.node(a, c), 1), (LieTerm.node(b, c), 1)]
    )


def test_left_normalize_examples():
    al = Alphabet([("a", 0), ("b", 0), ("c", 0), ("d", 0)])
    t = next(iter(P("[a,[b,c]]", al)))
    assert render_liepoly(left_normalize(t, al), al) == "[a,b,c] - [a,c,b]"
    t = next(iter(P("[[a,b],[c,d]]", al)))
    assert render_liepoly(left_normalize(t, al), al) == "[a,b,c,d] - [a,b,d,c]"
    for pa, pb in [(0, 0), (0, 1), (1, 0), (1, 1)]:
        al2 = Alphabet([("a", pa), ("b", pb)])
        t = next(iter(P("[b,a]", al2)))
        expected = -(-1) ** (pa * pb)
        assert left_normalize(t, al2) == LiePoly.of(next(iter(P("[a,b]", al2))), expected)


@given(st.data())
@settings(max_examples=150, deadline=None)
def test_left_normalize_shape_and_value(data):
    al = data.draw(alphabets())
    t = data.draw(trees(al, 6))
    out = left_normalize(t, al)
    first = min(t.labels())
    for comb in out:
        cur = comb
        while not cur.is_leaf:
            assert cur.right.is_leaf
            cur = cur.left
        assert cur.label == first
        assert sorted(comb.labels()) == sorted(t.labels())
    assert expand(out) == expand(t)


@pytest.mark.parametrize("ypar", [0, 1])
def test_odd_square_rule(ypar):
    assert nf_text("[x,x,y]", [("x", 1), ("y", ypar)]) == "-2*[y,x,x]"


def test_normal_form_examples():
    assert nf_text("[a,b]", [("a", 0), ("b", 0)]) == "-[b,a]"
    assert nf_text("[x,x,x]", [("x", 1)]) == "0"
    assert nf_text("[x,[x,x]]", [("x", 1)]) == "0"
    assert nf_text("[x,x]", [("x", 1)]) == "[x,x]"
    assert nf_text("[a,a]", [("a", 0)]) == "0"
    assert nf_text("[x,y] - [y,x]", [("x", 1), ("y", 1)]) == "0"


def test_basis_elements_are_fixed_points():
    al = Alphabet([("a", 0), ("b", 1), ("c", 1)])
    sb = super_basis(al, 5)
    for e in sb:
        nf = normal_form(LiePoly.of(e.term), al, sb)
        assert nf.coeffs == {e.index: 1}


def test_empty_input():
    al = Alphabet([("a", 0)])
    nf = normal_form(LiePoly(), al, super_basis(al, 2))
    assert not nf and nf.render() == "0"


def test_capacity_error():
    al = Alphabet([("a", 0), ("b", 0)])
    with pytest.raises(CapacityError):
        normal_form(P("[b,a,a]", al), al, super_basis(al, 2))


def test_soundness_idempotence_homogeneity():
    rng = random.Random(20240117)
    for _ in range(120):
        al = random_alphabet(rng)
        p = random_poly(rng, al, 5)
        sb = super_basis(al, 5)
        nf = normal_form(p, al, sb)
        assert expand(nf.to_liepoly()) == expand(p)
        assert normal_form(nf.to_liepoly(), al, sb) == nf
        for t in p:
            single = normal_form(LiePoly.of(t), al, sb)
            for i in single.coeffs:
                e = sb[i]
                assert e.weight == t.weight
                assert term_multidegree(e.term, al) == term_multidegree(t, al)


@given(st.data())
@settings(max_examples=100, deadline=None)
def test_soundness_property(data):
    al = data.draw(alphabets())
    t = data.draw(trees(al, 6))
    sb = super_basis(al, 6)
    assert expand(normal_form(LiePoly.of(t), al, sb).to_liepoly()) == expand(t)


def test_check_axioms_examples():
    even = Alphabet([("a", 0), ("b", 0), ("c", 0)])
    rep = check_axioms([P(n, even) for n in "abc"], even)
    assert rep and all(r.ok for r in rep)
    odd = Alphabet([("x", 1), ("y", 1)])
    rep = check_axioms([P("x", odd), P("y", odd)], odd)
    anti = [r for r in rep if r.identity == "antisymmetry"]
    assert len(anti) == 4 and all(r.ok for r in anti)
    assert {r.identity for r in rep} == {"antisymmetry", "jacobi", "odd_cube"}


def test_check_axioms_rejects_inhomogeneous():
    al = Alphabet([("a", 0), ("b", 1)])
    with pytest.raises(DomainError):
        check_axioms([P("a + b", al)], al)
