import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dforms.ideal import MonomialIdeal, all_monomials
from dforms.macaulay import (
    binomial,
    class_size,
    is_osequence,
    lex_ideal,
    macaulay_bound,
    macaulay_rep,
    piecewise_lexsegment,
)
from dforms.monomial import Monomial, MonomialSpace, w_profile
from dforms.stability import is_strongly_stable, is_strongly_stable_ideal


def rep_by_search(a, d):
    """All strictly decreasing chains k(d) > ... > k(1) >= 0 hitting a."""
    top = d
    while comb(top, d) <= a:
        top += 1
    hits = []
    for chain in itertools.combinations(range(top + 1), d):
        ks = tuple(reversed(chain))
        if sum(comb(k, d - t) for t, k in enumerate(ks)) == a:
            hits.append(ks)
    return hits


def bound_by_shadow(a, d):
    """Largest degree-(d+1) growth from a degree-d standard set of size a.

    Keep the a lex-smallest degree-d monomials of a polynomial ring with enough
    variables; count degree-(d+1) monomials all of whose degree-d divisors are kept.
    """
    n = 1
    while comb(n + d - 1, d) < a:
        n += 1
    n += 1
    mons = list(all_monomials(n, d))  # deglex descending
    kept = set(mons[len(mons) - a:]) if a else set()
    count = 0
    for u in all_monomials(n, d + 1):
        divisors = set()
        for j in u.support:
            e = list(u.exps)
            e[j] -= 1
            divisors.add(Monomial(tuple(e)))
        if divisors <= kept:
            count += 1
    return count


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(0, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial(200, 100) == comb(200, 100)


def test_rep_examples():
    assert macaulay_rep(4, 2).ks == (3, 1)
    assert rep_by_search(4, 2) == [(3, 1)]
    r0 = macaulay_rep(0, 4)
    assert r0.value() == 0 and all(binomial(k, i) == 0 for k, i in r0.terms())
    assert macaulay_rep(3, 1).ks == (3,)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
@pytest.mark.parametrize("a", range(0, 40))
def test_rep_matches_search(a, d):
    hits = rep_by_search(a, d)
    assert hits == [macaulay_rep(a, d).ks]


def test_bound_examples():
    assert macaulay_bound(3, 1) == 6
    assert macaulay_bound(4, 2) == 5
    assert all(macaulay_bound(0, d) == 0 for d in range(1, 6))


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("a", range(0, 13))
def test_bound_matches_shadow_count(a, d):
    assert macaulay_bound(a, d) == bound_by_shadow(a, d)


@given(st.integers(0, 10**6), st.integers(1, 12))
def test_rep_round_trip(a, d):
    rep = macaulay_rep(a, d)
    assert rep.value() == a
    assert all(x > y for x, y in zip(rep.ks, rep.ks[1:]))
    assert rep.ks[-1] >= 0


@given(st.integers(0, 10**5), st.integers(0, 10**5), st.integers(1, 8))
def test_bound_monotone(a, b, d):
    a, b = sorted((a, b))
    assert macaulay_bound(a, d) <= macaulay_bound(b, d)


def test_osequence_examples():
    v = is_osequence((1, 3, 4, 6))
    assert not v and v.index == 3 and v.bound == 5
    assert is_osequence((1,))
    assert is_osequence((1, 3, 4, 5))
    assert not is_osequence((2, 1)) and is_osequence((2, 1)).index == 0
    assert is_osequence((1, 1, 1, 0, 0))
    assert not is_osequence((1, 1, 0, 1))


def test_lex_ideal_examples():
    J = lex_ideal(2, (1, 1, 1))
    assert J == MonomialIdeal.parse(2, ["y1", "y2^3"], "y")
    assert lex_ideal(2, (1, 2, 1)) == MonomialIdeal.parse(2, ["y1^2", "y1y2", "y2^3"], "y")
    for d in (1, 2, 4):
        assert lex_ideal(d, (1,)) == MonomialIdeal(d, tuple(all_monomials(d, 1)), "y")
    with pytest.raises(ValueError, match="index 3"):
        lex_ideal(3, (1, 3, 4, 6))


def _osequences(d, length):
    ranges = [range(class_size(d, i) + 1) for i in range(length)]
    for w in itertools.product(*ranges):
        if is_osequence(w) and (length < 2 or w[1] <= d):
            yield w


@pytest.mark.parametrize("d, length", [(1, 4), (2, 4), (3, 3), (4, 3)])
def test_lex_ideal_hilbert_function(d, length):
    for w in _osequences(d, length):
        J = lex_ideal(d, w)
        assert is_strongly_stable_ideal(J)
        for e in range(length + 2):
            want = w[e] if e < len(w) else 0
            assert len(J.standard_monomials(e)) == want
            # each degree piece is an initial lex segment
            mons = list(all_monomials(d, e))
            inside = [u in J for u in mons]
            assert inside == sorted(inside, reverse=True)


def test_piecewise_examples():
    V = piecewise_lexsegment(2, (1, 2, 1))
    assert V == MonomialSpace.parse(2, ["x0^2", "x0x1", "x1^2", "x0x2"])
    assert is_strongly_stable(V)
    W = piecewise_lexsegment(2, (1, 1, 2))
    assert W == MonomialSpace.parse(2, ["x0^2", "x0x1", "x0x2", "x1x2"])
    assert not is_strongly_stable(W)
    assert piecewise_lexsegment(5, (1,)) == MonomialSpace.parse(5, ["x0^5"])
    with pytest.raises(ValueError, match="w_1"):
        piecewise_lexsegment(2, (1, 3))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_piecewise_profile(d):
    for w in itertools.product(*[range(class_size(d, i) + 1) for i in range(3)]):
        assert w_profile(piecewise_lexsegment(d, w)) == tuple(w[: max((i + 1 for i, x in enumerate(w) if x), default=0)])
