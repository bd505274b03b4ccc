"""One-row Betti tables, their m-invariants, and Eliahou-Kervaire counts.

A d-linear Betti row of an ideal in n variables is (beta_0, ..., beta_n) with
beta_i = beta_{i,i+d}.  The m-sequence (m_1, ..., m_{n+1}) is the alternating
binomial transform of the row; for a stable ideal m_i counts the minimal
generators whose largest variable is x_i.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .ideal import MonomialIdeal, all_monomials
from .macaulay import binomial, class_size, is_osequence, macaulay_bound, piecewise_lexsegment
from .stability import is_stable_ideal

__all__ = [
    "LinearBettiRow",
    "BettiTable",
    "m_from_betti",
    "betti_from_m",
    "ek_mcounts",
    "ek_betti",
    "Verdict",
    "feasible_linear",
    "witness_from_m",
    "hf_ideal",
    "hilbert_consistency",
    "HF_MONOMIAL_CAP",
]

HF_MONOMIAL_CAP = 2_000_000


@dataclass(frozen=True)
class LinearBettiRow:
    d: int
    row: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "row", tuple(self.row))
        if not self.row:
            raise ValueError("a Betti row needs at least beta_0")

    @property
    def n(self) -> int:
        return len(self.row) - 1

    @property
    def valid(self) -> bool:
        """False if some entry came out negative (not the row of any module)."""
        return all(b >= 0 for b in self.row)


@dataclass
class BettiTable:
    """beta_{i,j} with finite support; absent keys are zero."""

    n: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def rows(self) -> list[int]:
        """Degrees d with a nonzero entry in row d, i.e. beta_{i,i+d} != 0."""
        return sorted({j - i for (i, j), b in self.entries.items() if b})

    def linear_row(self, d: int) -> LinearBettiRow:
        return LinearBettiRow(d, tuple(self[i, i + d] for i in range(self.n + 1)))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rows": {str(d): list(self.linear_row(d).row) for d in self.rows()},
        }


def m_from_betti(row: LinearBettiRow | Sequence[int]) -> list[int]:
    """m_i = sum_k (-1)^{k-i+1} C(k, i-1) beta_k for i = 1..n+1."""
    beta = row.row if isinstance(row, LinearBettiRow) else tuple(row)
    n = len(beta) - 1
    return [
        sum((-1) ** ((k - i + 1) % 2) * binomial(k, i - 1) * beta[k] for k in range(n + 1))
        for i in range(1, n + 2)
    ]


def betti_from_m(m: Sequence[int], d: int = 1) -> LinearBettiRow:
    """beta_i = sum_{k=i}^{n+1} C(k-1, i) m_k; exact inverse of :func:`m_from_betti`."""
    n = len(m) - 1
    return LinearBettiRow(d, tuple(
        sum(binomial(k - 1, i) * m[k - 1] for k in range(i + 1, n + 2))
        for i in range(n + 1)
    ))


def _require_stable(I: MonomialIdeal) -> None:
    if not is_stable_ideal(I):
        raise ValueError("Eliahou-Kervaire requires a stable ideal")


def ek_mcounts(I: MonomialIdeal) -> dict[int, list[int]]:
    """Per generator degree d, [m_1, ..., m_{n+1}]: generators with largest variable x_i."""
    _require_stable(I)
    out: dict[int, list[int]] = defaultdict(lambda: [0] * (I.nvars + 1))
    for g in I.gens:
        # 0-based max index k is the 1-based m(u) = k + 1
        out[g.degree][len(g.exps) - 1] += 1
    return dict(sorted(out.items()))


def ek_betti(I: MonomialIdeal) -> BettiTable:
    """beta_{i,i+d} = sum over degree-d generators u of C(m(u) - 1, i)."""
    _require_stable(I)
    T = BettiTable(I.nvars)
    for g in I.gens:
        m = len(g.exps)  # 1-based largest variable
        for i in range(m):
            key = (i, i + g.degree)
            T.entries[key] = T.entries.get(key, 0) + binomial(m - 1, i)
    return T


@dataclass
class Verdict:
    feasible: bool
    m: list[int]
    violation: str | None = None
    index: int | None = None      # 1-based k of the offending m_k
    value: int | None = None
    bound: int | None = None
    witness: MonomialIdeal | None = None

    def __bool__(self) -> bool:
        return self.feasible

    def to_json(self) -> dict:
        out: dict = {"feasible": self.feasible, "m": self.m}
        if self.feasible:
            out["witness"] = self.witness.to_json()
            out["roundtrip"] = "ok"
        else:
            out["violation"] = self.violation
            out["violation_detail"] = {"index": self.index, "value": self.value, "bound": self.bound}
        return out


def witness_from_m(m: Sequence[int], d: int, n: int | None = None) -> MonomialIdeal:
    """Strongly stable ideal of K[x_1..x_n] generated in degree d with m_k(I) = m_k.

    Built from the piecewise lexsegment with w_i = m_{i+1}; raises if m is not
    realisable.
    """
    m = list(m)
    n = len(m) if n is None else n
    w = m[:n]
    V = piecewise_lexsegment(d, w)
    if V.max_index is not None and V.max_index >= n:
        raise ValueError(f"witness needs more than {n} variables")
    return MonomialIdeal(n, tuple(V.members), "x1")


def feasible_linear(row: LinearBettiRow) -> Verdict:
    """Decide whether ``row`` is the d-linear Betti row of an ideal of K[x_1..x_n]."""
    n, d = row.n, row.d
    m = m_from_betti(row)

    def no(msg, k=None, value=None, bound=None):
        return Verdict(False, m, msg, k, value, bound)

    for k, mk in enumerate(m, start=1):
        if mk < 0:
            return no(f"m{k} = {mk} < 0", k, mk, 0)
    if m[0] != 1:
        return no(f"m1 = {m[0]} != 1", 1, m[0], 1)
    if n >= 2 and m[1] > d:
        return no(f"m2 = {m[1]} > d = {d}", 2, m[1], d)
    # 1-based m_{i+1} <= m_i^<i-1> is the 0-based O-sequence test on w_i = m_{i+1}
    verdict = is_osequence(m[:n])
    if not verdict:
        k = verdict.index + 1
        return no(f"m{k} > bound(m{k - 1},{k - 2})={verdict.bound}", k, m[k - 1], verdict.bound)
    if m[n] != 0:
        return no(f"m{n + 1} = {m[n]} != 0", n + 1, m[n], 0)
    for i in range(n):
        if m[i] > class_size(d, i):
            return no(f"m{i + 1} = {m[i]} > C({i + d - 1},{d - 1})", i + 1, m[i], class_size(d, i))
    I = witness_from_m(m, d, n)
    got = ek_betti(I).linear_row(d)
    if got.row != row.row:
        raise AssertionError(f"witness row {got.row} != {row.row}")
    return Verdict(True, m, witness=I)


def hf_ideal(I: MonomialIdeal, t: int, cap: int = HF_MONOMIAL_CAP) -> int:
    """Number of degree-t monomials lying in I, by direct enumeration."""
    if binomial(I.nvars + t - 1, t) > cap:
        raise ValueError(f"degree {t} in {I.nvars} variables exceeds the enumeration cap {cap}")
    return sum(1 for u in all_monomials(I.nvars, t) if u in I)


def hilbert_consistency(I: MonomialIdeal, T: BettiTable, t_max: int) -> bool:
    """Compare direct monomial counts of I with the Euler characteristic of T."""
    n = I.nvars
    for t in range(t_max + 1):
        euler = sum((-1) ** i * b * binomial(n + t - j - 1, n - 1)
                    for (i, j), b in T.entries.items() if t >= j)
        if hf_ideal(I, t) != euler:
            return False
    return True
