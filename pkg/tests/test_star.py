from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dforms.monomial import Monomial, MonomialSpace, max_index, monomials_of_degree, parse_monomial
from dforms.star import (
    YMonomial,
    algebra_generators,
    factorize,
    is_complement_ideal,
    phi,
    psi,
    star,
    y_monomials,
)

from conftest import monomials, same_degree, y_monomials as ymonos


def mono(text):
    return parse_monomial(text)


def test_star_examples():
    assert star(mono("x0^2 x1"), mono("x0 x1^2")) == mono("x0 x1 x2")
    assert star(mono("x0^3"), mono("x0 x1 x2")) == mono("x0 x1 x2")
    assert star(mono("x0 x1 x3"), mono("x0 x1^2")) == mono("x0 x2 x4")
    with pytest.raises(ValueError, match="equal degrees"):
        star(mono("x0^2"), mono("x0^3"))


def test_generators():
    assert algebra_generators(2) == [mono("x0 x1"), mono("x1^2")]
    assert algebra_generators(1) == [mono("x1")]
    assert algebra_generators(3) == [mono("x0^2 x1"), mono("x0 x1^2"), mono("x1^3")]


def test_phi_psi_examples():
    assert phi(YMonomial.var(3, 2)) == mono("x0 x1^2")
    for d in (1, 2, 5):
        assert phi(YMonomial.unit(d)) == Monomial((d,))
        assert psi(Monomial((d,))) == YMonomial.unit(d)
    assert phi(YMonomial(2, (1, 1))) == mono("x1 x2")
    assert psi(mono("x1^2")) == YMonomial.var(2, 1)
    assert psi(mono("x1^2 x2")) == YMonomial(3, (1, 0, 1))
    assert phi(YMonomial(3, (1, 0, 1))) == mono("x1^2 x2")
    with pytest.raises(ValueError):
        psi(mono("x0 x1"), 3)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_phi_on_variables(d):
    for i in range(1, d + 1):
        assert phi(YMonomial.var(d, i)) == Monomial((i - 1, d + 1 - i))


def _psi_oracle(u):
    """Invert phi by search over all y-monomials of the right degree."""
    d, e = u.degree, max_index(u)
    hits = [w for w in y_monomials(d, e) if phi(w) == u]
    assert len(hits) == 1
    return hits[0]


@given(monomials(max_idx=5, max_degree=4))
def test_psi_matches_search(u):
    assert psi(u) == _psi_oracle(u)


@given(st.integers(1, 5).flatmap(lambda d: st.tuples(ymonos(d), ymonos(d))))
def test_phi_is_multiplicative(pair):
    w1, w2 = pair
    assert phi(w1 * w2) == star(phi(w1), phi(w2))
    assert psi(phi(w1)) == w1
    assert phi(w1).degree == w1.d
    assert max_index(phi(w1)) == w1.degree if w1.degree else phi(w1) == Monomial((w1.d,))


@given(same_degree(3))
def test_star_commutative_associative(triple):
    u, v, w = triple
    d = u.degree
    assert star(u, v) == star(v, u)
    assert star(star(u, v), w) == star(u, star(v, w))
    assert star(u, Monomial((d,))) == u
    assert max_index(star(u, v)) == max_index(u) + max_index(v)
    assert phi(psi(u)) == u
    assert psi(u).degree == max_index(u)


@pytest.mark.parametrize("d", range(1, 5))
@pytest.mark.parametrize("e", range(0, 5))
def test_grade_dimensions(d, e):
    n_x = sum(1 for u in monomials_of_degree(d, e) if len(u.exps) - 1 == e)
    n_y = sum(1 for _ in y_monomials(d, e))
    assert n_x == n_y == comb(e + d - 1, e)


def test_factorize_examples():
    assert factorize(mono("x0 x1 x2")) == [mono("x0 x1^2"), mono("x0^2 x1")]
    assert factorize(mono("x1^3")) == [mono("x1^3")]
    assert factorize(mono("x0 x2^2")) == [mono("x0 x1^2"), mono("x0 x1^2")]
    assert star(mono("x0 x1^2"), mono("x0 x1^2")) == mono("x0 x2^2")
    assert factorize(mono("x0^3")) == []


@pytest.mark.parametrize("d", range(1, 5))
def test_factorize_multiplies_back(d):
    for u in monomials_of_degree(d, 4):
        factors = factorize(u)
        assert len(factors) == max_index(u)
        prod = Monomial((d,))
        for f in factors:
            assert max_index(f) == 1 and f.degree == d
            prod = star(prod, f)
        assert prod == u


def test_complement_ideal_examples():
    assert is_complement_ideal(MonomialSpace.parse(2, ["x0^2", "x1^2"]))
    V5 = MonomialSpace.parse(3, ["x0^3", "x0^2x1", "x0x1^2", "x0x1x2", "x0x1x3"])
    assert not is_complement_ideal(V5)
    assert is_complement_ideal(MonomialSpace(3))


def test_y_text_forms():
    w = YMonomial.parse(3, "y1^2 y3")
    assert w.exps == (2, 0, 1) and str(w) == "y1^2 y3" and w.to_json() == [2, 0, 1]
    assert str(YMonomial.unit(2)) == "1"
    with pytest.raises(ValueError):
        YMonomial.parse(2, "y3")
