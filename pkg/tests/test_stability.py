import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dforms.ideal import MonomialIdeal
from dforms.monomial import MonomialSpace, complement_in_degree, monomials_of_degree
from dforms.oracle import SpaceIndex, enumerate_spaces
from dforms.stability import (
    ideal_closure,
    is_block_exchange_closed,
    is_block_stable,
    is_p_borel,
    is_squarefree_strongly_stable,
    is_stable,
    is_stable_ideal,
    is_strongly_stable,
    is_strongly_stable_ideal,
    lucas_nonzero,
    stable_closure,
    strongly_stable_closure,
)
from dforms.macaulay import binomial
from dforms.star import YMonomial, is_complement_ideal, phi, y_monomials

from conftest import same_degree

V2 = MonomialSpace.parse(2, ["x0^2", "x1^2"])
V5 = MonomialSpace.parse(3, ["x0^3", "x0^2x1", "x0x1^2", "x0x1x2", "x0x1x3"])
V4 = MonomialSpace.parse(3, ["x0^3", "x0^2x1", "x0x1^2", "x0x1x2"])
SMALL = [(1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]


def test_classification_examples():
    assert is_block_stable(V2) and not is_stable(V2)
    assert is_stable(V5) and not is_block_stable(V5)
    assert is_stable(V4) and is_block_stable(V4) and not is_strongly_stable(V4)


def test_predicate_examples():
    assert is_stable(MonomialSpace.parse(4, ["x0^4"]))
    full = MonomialSpace(3, monomials_of_degree(3, 3))
    assert is_strongly_stable(full)
    assert is_strongly_stable(MonomialSpace.parse(2, ["x0^2", "x0x1", "x1^2"]))
    for pred in (is_stable, is_strongly_stable, is_block_stable, is_block_exchange_closed):
        assert pred(MonomialSpace(2))


def test_exchange_closed_examples():
    W = [YMonomial.var(2, 1), YMonomial.var(2, 2)]
    assert is_block_exchange_closed(MonomialSpace(2, [phi(w) for w in W]))
    assert is_block_exchange_closed(MonomialSpace.parse(3, ["x0^3"]))
    assert not is_block_exchange_closed(MonomialSpace.parse(2, ["x0x1"]))


def test_p_borel_examples():
    assert is_p_borel(V2, 2)
    assert not is_p_borel(V2, 3)
    assert not is_p_borel(V4, 7)  # x0 x1 x2 needs x0^2 x2
    with pytest.raises(ValueError):
        is_p_borel(V2, 4)


@pytest.mark.parametrize("n", range(0, 40))
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_lucas_against_binomials(n, p):
    for k in range(n + 1):
        assert lucas_nonzero(n, k, p) == (binomial(n, k) % p != 0)


def test_closure_examples():
    assert strongly_stable_closure(MonomialSpace.parse(2, ["x1^2"])) == \
        MonomialSpace.parse(2, ["x0^2", "x0x1", "x1^2"])
    assert strongly_stable_closure(MonomialSpace.parse(3, ["x0^3"])) == MonomialSpace.parse(3, ["x0^3"])
    assert strongly_stable_closure(MonomialSpace(2)) == MonomialSpace(2)


@given(same_degree(4, max_idx=4, max_degree=4), st.integers(0, 3))
def test_closure_laws(members, cut):
    d = members[0].degree
    V = MonomialSpace(d, members)
    U = MonomialSpace(d, members[:cut])
    C = strongly_stable_closure(V)
    assert is_strongly_stable(C)
    assert V <= C
    assert strongly_stable_closure(C) == C
    assert strongly_stable_closure(U) <= C
    S = stable_closure(V)
    assert is_stable(S) and V <= S <= C


@pytest.mark.parametrize("d, M", SMALL)
def test_implications_exhaustive(d, M):
    for V in enumerate_spaces(d, M):
        ss = is_strongly_stable(V)
        if ss:
            assert is_stable(V) and is_block_stable(V)
            assert all(is_p_borel(V, p) for p in (2, 3, 5))
        for p in (2, 3, 5):
            if is_p_borel(V, p):
                assert is_block_stable(V)
        # block stable <=> complement is a *-ideal
        assert is_block_stable(V) == is_complement_ideal(V)
        # strongly stable <=> complement is a *-ideal closed under exchange moves
        C = complement_in_degree(V, M)
        assert ss == (is_block_stable(V) and is_block_exchange_closed(C))


def _y_strongly_stable(W):
    d = next(iter(W)).d
    for w in W:
        for p in range(d):
            for q in range(p):
                if w.exps[p]:
                    e = list(w.exps)
                    e[p] -= 1
                    e[q] += 1
                    if YMonomial(d, tuple(e)) not in W:
                        return False
    return True


@pytest.mark.parametrize("d, e", [(2, 1), (2, 4), (2, 8), (3, 1), (3, 2), (3, 3), (4, 2)])
def test_exchange_closure_transports_strong_stability(d, e):
    ys = list(y_monomials(d, e))
    assert len(ys) <= 10
    for r in range(1, len(ys) + 1):
        for W in itertools.combinations(ys, r):
            V = MonomialSpace(d, [phi(w) for w in W])
            assert _y_strongly_stable(set(W)) == is_block_exchange_closed(V)


def test_mask_tables_agree_with_predicates():
    ix = SpaceIndex(2, 3)
    for mask in range(2**ix.size):
        V = ix.space(mask)
        assert ix.mask(V) == mask
        assert ix.closed_one(mask, ix.strong) == is_strongly_stable(V)
        assert ix.closed_one(mask, ix.stable) == is_stable(V)
        assert ix.closed_one(mask, ix.block) == is_block_stable(V)
        assert ix.closed_one(mask, ix.complement_ideal) == is_complement_ideal(V)
        assert ix.closed_one(mask, ix.p_borel(3)) == is_p_borel(V, 3)


def test_ideal_predicates():
    I = MonomialIdeal.parse(3, ["x1^3", "x1^2x2", "x1x2^2", "x1x2x3"])
    assert is_stable_ideal(I) and not is_strongly_stable_ideal(I)
    assert is_strongly_stable_ideal(MonomialIdeal.parse(2, ["x1^2", "x1x2", "x2^2"]))
    assert not is_stable_ideal(MonomialIdeal.parse(2, ["x2"]))
    assert is_strongly_stable_ideal(ideal_closure([MonomialIdeal.parse(3, ["x2x3^2"]).gens[0]], 3))


def test_squarefree_strongly_stable():
    assert is_squarefree_strongly_stable(MonomialIdeal.parse(3, ["x1x2", "x1x3"]))
    assert not is_squarefree_strongly_stable(MonomialIdeal.parse(3, ["x2x3"]))
    assert is_squarefree_strongly_stable(MonomialIdeal.parse(1, ["x1"]))
    with pytest.raises(ValueError):
        is_squarefree_strongly_stable(MonomialIdeal.parse(2, ["x1^2"]))
