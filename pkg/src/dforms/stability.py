"""Stability predicates on monomial spaces and monomial ideals.

Each predicate is "closed under a family of moves".  The move generators are
exported separately so the bitmask enumerator in :mod:`dforms.oracle` can build
its lookup tables from exactly the same rules.
"""
from __future__ import annotations

from typing import Callable, Iterable, Iterator

from .ideal import MonomialIdeal
from .monomial import Monomial, MonomialSpace

__all__ = [
    "stable_moves",
    "strong_moves",
    "block_shifts",
    "exchange_moves",
    "p_borel_moves",
    "is_stable",
    "is_strongly_stable",
    "is_block_stable",
    "is_block_exchange_closed",
    "is_p_borel",
    "is_prime",
    "lucas_nonzero",
    "strongly_stable_closure",
    "stable_closure",
    "is_stable_ideal",
    "is_strongly_stable_ideal",
    "is_squarefree_strongly_stable",
    "ideal_closure",
]

Moves = Callable[[Monomial], Iterable[Monomial]]


def stable_moves(u: Monomial) -> Iterator[Monomial]:
    """(u / x_{m(u)}) x_i for every i < m(u)."""
    m = len(u.exps) - 1
    for i in range(m):
        yield u.move(m, i)


def strong_moves(u: Monomial) -> Iterator[Monomial]:
    """(u / x_j) x_i for every x_j dividing u and every i < j."""
    for j in u.support:
        for i in range(j):
            yield u.move(j, i)


def block_shifts(u: Monomial) -> Iterator[Monomial]:
    """Shift the tail block x_i^{a_i}...x_e^{a_e} down one index, i = 1..e."""
    a = u.exps
    for i in range(1, len(a)):
        # x_{i-1} absorbs a_i, every later exponent slides down one slot
        yield Monomial(a[: i - 1] + (a[i - 1] + a[i],) + a[i + 1 :])


def exchange_moves(u: Monomial) -> Iterator[Monomial]:
    """Decrement a_i and increment a_{i+1}, for i < m(u) with a_i > 0."""
    a = u.exps
    for i in range(len(a) - 1):
        if a[i]:
            yield u.move(i, i + 1)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def lucas_nonzero(n: int, k: int, p: int) -> bool:
    """Whether C(n, k) is nonzero mod the prime p (digitwise comparison in base p)."""
    while k:
        if k % p > n % p:
            return False
        n //= p
        k //= p
    return True


def p_borel_moves(u: Monomial, p: int) -> Iterator[Monomial]:
    """(u / x_j^k) x_i^k for i < j and 1 <= k <= a_j with C(a_j, k) != 0 mod p."""
    for j in u.support:
        a = u.exps[j]
        for k in range(1, a + 1):
            if lucas_nonzero(a, k, p):
                for i in range(j):
                    yield u.move(j, i, k)


def _closed(V: MonomialSpace, moves: Moves) -> bool:
    members = V.members
    return all(w in members for u in members for w in moves(u))


def is_stable(V: MonomialSpace) -> bool:
    return _closed(V, stable_moves)


def is_strongly_stable(V: MonomialSpace) -> bool:
    return _closed(V, strong_moves)


def is_block_stable(V: MonomialSpace) -> bool:
    return _closed(V, block_shifts)


def is_block_exchange_closed(V: MonomialSpace) -> bool:
    """The *-side form of strong stability: V = phi(W) with W strongly stable."""
    return _closed(V, exchange_moves)


def is_p_borel(V: MonomialSpace, p: int) -> bool:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return _closed(V, lambda u: p_borel_moves(u, p))


def _saturate(seed: Iterable[Monomial], moves: Moves) -> set[Monomial]:
    out = set(seed)
    todo = list(out)
    while todo:
        u = todo.pop()
        for w in moves(u):
            if w not in out:
                out.add(w)
                todo.append(w)
    return out


def strongly_stable_closure(V: MonomialSpace) -> MonomialSpace:
    return MonomialSpace(V.d, _saturate(V.members, strong_moves))


def stable_closure(V: MonomialSpace) -> MonomialSpace:
    return MonomialSpace(V.d, _saturate(V.members, stable_moves))


# Ideal-level checks run the defining exchange on minimal generators only and
# test membership by divisibility; that is equivalent to the check on the
# (infinite) underlying monomial space.

def is_stable_ideal(I: MonomialIdeal) -> bool:
    return all(w in I for g in I.gens for w in stable_moves(g))


def is_strongly_stable_ideal(I: MonomialIdeal) -> bool:
    return all(w in I for g in I.gens for w in strong_moves(g))


def is_squarefree_strongly_stable(I: MonomialIdeal) -> bool:
    if not I.is_squarefree():
        raise ValueError("squarefree strong stability needs squarefree generators")
    for g in I.gens:
        for j in g.support:
            for i in range(j):
                if g.exponent(i) == 0 and g.move(j, i) not in I:
                    return False
    return True


def ideal_closure(gens: Iterable[Monomial], nvars: int, kind: str = "strong",
                  convention: str = "x1") -> MonomialIdeal:
    """Smallest stable ("stable") or strongly stable ("strong") ideal containing gens."""
    moves = {"strong": strong_moves, "stable": stable_moves}[kind]
    return MonomialIdeal(nvars, tuple(_saturate(gens, moves)), convention)
