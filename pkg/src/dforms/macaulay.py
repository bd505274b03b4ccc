"""Macaulay representations, the <d> growth bound, O-sequences and lexsegments."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .ideal import MonomialIdeal
from .monomial import Monomial, MonomialSpace, deglex_key, monomials_of_degree
from .star import y_monomials

__all__ = [
    "binomial",
    "MacaulayRep",
    "macaulay_rep",
    "macaulay_bound",
    "OSequenceVerdict",
    "is_osequence",
    "lex_ideal",
    "piecewise_lexsegment",
    "class_size",
]


def binomial(n: int, k: int) -> int:
    """C(n, k) with C(n, k) = 0 for k > n or k < 0."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def class_size(d: int, i: int) -> int:
    """Number of degree-d monomials of S with max index exactly i."""
    return binomial(i + d - 1, d - 1)


@dataclass(frozen=True)
class MacaulayRep:
    """a = sum_{i=1}^d C(k(i), i) with k(d) > ... > k(1) >= 0; ``ks`` is (k(d), ..., k(1))."""

    a: int
    d: int
    ks: tuple[int, ...]

    def value(self) -> int:
        return sum(binomial(k, self.d - t) for t, k in enumerate(self.ks))

    def bound(self) -> int:
        return sum(binomial(k + 1, self.d - t + 1) for t, k in enumerate(self.ks))

    def terms(self) -> list[tuple[int, int]]:
        """(k(i), i) pairs, top degree first."""
        return [(k, self.d - t) for t, k in enumerate(self.ks)]


def _largest_k(rem: int, i: int) -> int:
    """max{k : C(k, i) <= rem}; at least i - 1 since C(i-1, i) = 0."""
    lo = i - 1
    if binomial(i, i) > rem:
        return lo
    hi = i
    while binomial(hi, i) <= rem:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binomial(mid, i) <= rem:
            lo = mid
        else:
            hi = mid
    return lo


def macaulay_rep(a: int, d: int) -> MacaulayRep:
    if d < 1 or a < 0:
        raise ValueError("need a >= 0 and d >= 1")
    ks, rem = [], a
    for i in range(d, 0, -1):
        k = _largest_k(rem, i)
        ks.append(k)
        rem -= binomial(k, i)
    assert rem == 0
    return MacaulayRep(a, d, tuple(ks))


def macaulay_bound(a: int, d: int) -> int:
    """a^<d>."""
    return macaulay_rep(a, d).bound()


@dataclass(frozen=True)
class OSequenceVerdict:
    ok: bool
    index: int | None = None    # first violated index (0-based)
    bound: int | None = None    # the bound that entry exceeded, if any

    def __bool__(self) -> bool:
        return self.ok


def is_osequence(w: Sequence[int]) -> OSequenceVerdict:
    """h_0 = 1 and h_{i+1} <= h_i^<i> for i >= 1 (0-based numbering).

    h_1 is left free here; callers impose h_1 <= d separately.
    """
    w = list(w)
    if not w or w[0] != 1:
        return OSequenceVerdict(False, 0, 1)
    for i in range(1, len(w) - 1):
        if w[i] < 0:
            return OSequenceVerdict(False, i, None)
        b = macaulay_bound(w[i], i)
        if w[i + 1] > b:
            return OSequenceVerdict(False, i + 1, b)
    if len(w) > 1 and w[-1] < 0:
        return OSequenceVerdict(False, len(w) - 1, None)
    return OSequenceVerdict(True)


def _support(w: Sequence[int]) -> int:
    n = len(w)
    while n and w[n - 1] == 0:
        n -= 1
    return n


def lex_ideal(d: int, w: Sequence[int]) -> MonomialIdeal:
    """The lexsegment ideal of K[y_1..y_d] whose quotient has Hilbert function w.

    In degree e the ideal holds the largest C(e+d-1, e) - w_e monomials in lex
    order y_1 > ... > y_d; from the first degree past the support onwards it
    holds everything.
    """
    w = list(w)
    verdict = is_osequence(w)
    if not verdict:
        raise ValueError(f"not an O-sequence: violated at index {verdict.index}")
    if len(w) > 1 and w[1] > d:
        raise ValueError(f"w_1 = {w[1]} exceeds d = {d}")
    top = _support(w)
    pieces: list[set] = []
    gens = []
    for e in range(top + 1):
        mons = list(y_monomials(d, e))
        keep = len(mons) - (w[e] if e < len(w) else 0)
        piece = {u.as_monomial() for u in mons[:keep]}
        prev = pieces[-1] if pieces else set()
        for u in piece:
            if not any(u.exponent(j) and (u / Monomial.from_indices([j])) in prev for j in range(d)):
                gens.append(u)
        pieces.append(piece)
    J = MonomialIdeal(d, tuple(gens), "y")
    for e in range(top + 2):
        got = len(J.standard_monomials(e))
        want = w[e] if e < len(w) else 0
        if got != want:
            raise AssertionError(f"lex ideal has HF {got} != {want} in degree {e}")
    return J


def piecewise_lexsegment(d: int, w: Sequence[int]) -> MonomialSpace:
    """Union over i of the deglex-largest w_i degree-d monomials with max index i."""
    members: list[Monomial] = []
    for i, wi in enumerate(w):
        if wi < 0 or wi > class_size(d, i):
            raise ValueError(f"w_{i} = {wi} is outside 0..{class_size(d, i)}")
        if wi == 0:
            continue
        cls = sorted((u for u in monomials_of_degree(d, i) if len(u.exps) - 1 == i),
                     key=deglex_key, reverse=True)
        members.extend(cls[:wi])
    return MonomialSpace(d, members)
