"""Brute-force enumeration harness for the stability equivalences.

Subsets of the deglex-ordered monomial list are encoded as bitmasks (bit k is
the k-th monomial).  Every stability notion is "closure under moves", so a
predicate becomes one requirement mask per monomial: V is closed iff
``req[k] & ~V == 0`` for every k in V.  The tables are built from the same move
generators that :mod:`dforms.stability` uses, and the *-ideal table from
:func:`dforms.star.star`, so the vectorised checks and the per-space library
predicates share definitions but not code paths.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, Iterator

import numpy as np

from .ideal import MonomialIdeal
from .macaulay import binomial, class_size, is_osequence
from .monomial import Monomial, MonomialSpace, monomials_of_degree
from .stability import (
    block_shifts,
    exchange_moves,
    ideal_closure,
    p_borel_moves,
    stable_moves,
    strong_moves,
    strongly_stable_closure,
)
from .star import algebra_generators, star

__all__ = [
    "MONOMIAL_CAP",
    "SUBSET_CAP",
    "CensusConfig",
    "CensusReport",
    "SpaceIndex",
    "enumerate_monomials",
    "enumerate_spaces",
    "theorem29_census",
    "osequence_vectors",
    "random_strongly_stable",
    "random_stable_ideal",
    "strongly_stable_ideals",
]

MONOMIAL_CAP = 10_000
SUBSET_CAP = 2**20
_CHUNK = 2**16


def enumerate_monomials(d: int, max_idx: int, cap: int = MONOMIAL_CAP) -> list[Monomial]:
    """All degree-d monomials with max index <= max_idx, deglex descending."""
    count = binomial(max_idx + d, d)
    if count > cap:
        raise ValueError(f"{count} monomials exceed the cap {cap}")
    return list(monomials_of_degree(d, max_idx))


def _subset_count_check(count: int, cap: int) -> None:
    if 2**count > cap:
        raise ValueError(
            f"2^{count} subsets exceed the cap {cap}; use a smaller degree or max index")


class SpaceIndex:
    """Bitmask view of the subsets of one monomial list."""

    def __init__(self, d: int, max_idx: int, cap: int = SUBSET_CAP):
        self.d = d
        self.max_idx = max_idx
        self.monomials = enumerate_monomials(d, max_idx)
        _subset_count_check(len(self.monomials), cap)
        self.position = {u: k for k, u in enumerate(self.monomials)}
        self.size = len(self.monomials)
        self.grade_masks = [
            sum(1 << k for k, u in enumerate(self.monomials) if len(u.exps) - 1 == e)
            for e in range(max_idx + 1)
        ]

    def space(self, mask: int) -> MonomialSpace:
        return MonomialSpace(self.d, (u for k, u in enumerate(self.monomials) if mask >> k & 1))

    def mask(self, V: MonomialSpace) -> int:
        return sum(1 << self.position[u] for u in V.members)

    def requirements(self, moves: Callable[[Monomial], object]) -> list[int]:
        """req[k] = bits of every move target of monomial k (targets must stay in range)."""
        req = []
        for u in self.monomials:
            r = 0
            for w in moves(u):
                r |= 1 << self.position[w]
            req.append(r)
        return req

    @cached_property
    def strong(self) -> list[int]:
        return self.requirements(strong_moves)

    @cached_property
    def stable(self) -> list[int]:
        return self.requirements(stable_moves)

    @cached_property
    def block(self) -> list[int]:
        return self.requirements(block_shifts)

    @cached_property
    def exchange(self) -> list[int]:
        return self.requirements(exchange_moves)

    def p_borel(self, p: int) -> list[int]:
        return self.requirements(lambda u: p_borel_moves(u, p))

    @cached_property
    def complement_ideal(self) -> list[int]:
        """V^c is a *-ideal iff star(k, g) in V forces k in V: req[star(k, g)] holds k."""
        req = [0] * self.size
        gens = algebra_generators(self.d)
        for k, u in enumerate(self.monomials):
            for g in gens:
                t = self.position.get(star(u, g))
                if t is not None:  # a product past max_idx is never in V
                    req[t] |= 1 << k
        return req

    def closed(self, masks: np.ndarray, req: list[int]) -> np.ndarray:
        """Vectorised closure test over an array of subset masks."""
        ok = np.ones(masks.shape, dtype=bool)
        for k, r in enumerate(req):
            if not r:
                continue
            r = np.int64(r)
            has_k = (masks >> k) & 1 == 1
            ok &= ~has_k | ((masks & r) == r)
        return ok

    def closed_one(self, mask: int, req: list[int]) -> bool:
        k, m = 0, mask
        while m:
            if m & 1 and req[k] & ~mask:
                return False
            m >>= 1
            k += 1
        return True

    def profiles(self, masks: np.ndarray) -> np.ndarray:
        """w-profiles, one row per mask, padded to max_idx + 1 entries."""
        cols = [np.bitwise_count(masks & np.int64(g)) for g in self.grade_masks]
        return np.stack(cols, axis=1).astype(np.int64) if cols else np.zeros((len(masks), 0), np.int64)

    def all_masks(self, start: int = 0, stop: int | None = None) -> np.ndarray:
        stop = 2**self.size if stop is None else stop
        return np.arange(start, stop, dtype=np.int64)


def enumerate_spaces(d: int, max_idx: int, predicate: Callable[[MonomialSpace], bool] | None = None,
                     cap: int = SUBSET_CAP) -> Iterator[MonomialSpace]:
    """Every subset of enumerate_monomials(d, max_idx) passing ``predicate``, in bitmask order."""
    index = SpaceIndex(d, max_idx, cap)
    for mask in range(2**index.size):
        V = index.space(mask)
        if predicate is None or predicate(V):
            yield V


def osequence_vectors(d: int, max_idx: int) -> set[tuple[int, ...]]:
    """O-sequences w_0..w_{max_idx} with w_1 <= d and each w_i within its class size."""
    ranges = [range(class_size(d, i) + 1) for i in range(max_idx + 1)]
    out = set()
    for w in product(*ranges):
        if is_osequence(w) and (len(w) < 2 or w[1] <= d):
            out.add(w)
    return out


@dataclass(frozen=True)
class CensusConfig:
    d: int
    max_idx: int
    jobs: int = 1
    cap: int = SUBSET_CAP


@dataclass
class CensusReport:
    config: CensusConfig
    strongly_stable: set = field(default_factory=set)
    block_stable: set = field(default_factory=set)
    osequences: set = field(default_factory=set)
    counts: dict = field(default_factory=dict)

    @property
    def sets_equal(self) -> bool:
        return self.strongly_stable == self.block_stable == self.osequences

    def to_json(self) -> dict:
        return {
            "d": self.config.d,
            "max_index": self.config.max_idx,
            "sets_equal": self.sets_equal,
            "counts": self.counts,
        }


def _census_chunk(args) -> tuple[set, set, int, int]:
    d, max_idx, cap, start, stop = args
    index = SpaceIndex(d, max_idx, cap)
    masks = index.all_masks(start, stop)
    masks = masks[masks != 0]  # the zero space has no Hilbert function
    ss = index.closed(masks, index.strong)
    bs = index.closed(masks, index.block)
    prof = index.profiles(masks)
    ss_set = {tuple(int(x) for x in row) for row in np.unique(prof[ss], axis=0)}
    bs_set = {tuple(int(x) for x in row) for row in np.unique(prof[bs], axis=0)}
    return ss_set, bs_set, int(ss.sum()), int(bs.sum())


def theorem29_census(d: int, max_idx: int, jobs: int = 1, cap: int = SUBSET_CAP) -> CensusReport:
    """Compare the w-profiles of strongly stable spaces, of block stable spaces,
    and the admissible O-sequences, for nonzero spaces in x_0..x_{max_idx}."""
    config = CensusConfig(d, max_idx, jobs, cap)
    index = SpaceIndex(d, max_idx, cap)
    total = 2**index.size
    chunks = [(d, max_idx, cap, s, min(s + _CHUNK, total)) for s in range(0, total, _CHUNK)]
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_census_chunk, chunks))
    else:
        parts = [_census_chunk(c) for c in chunks]
    report = CensusReport(config)
    n_ss = n_bs = 0
    for ss_set, bs_set, a, b in parts:
        report.strongly_stable |= ss_set
        report.block_stable |= bs_set
        n_ss += a
        n_bs += b
    report.osequences = osequence_vectors(d, max_idx)
    report.counts = {
        "monomials": index.size,
        "subsets": total,
        "strongly_stable_spaces": n_ss,
        "block_stable_spaces": n_bs,
        "strongly_stable_profiles": len(report.strongly_stable),
        "block_stable_profiles": len(report.block_stable),
        "osequences": len(report.osequences),
    }
    return report


def random_strongly_stable(d: int, max_idx: int, size: int, seed: int) -> MonomialSpace:
    """Strongly stable closure of ``size`` monomials drawn uniformly (with replacement)."""
    rng = random.Random(seed)
    pool = enumerate_monomials(d, max_idx)
    sample = [rng.choice(pool) for _ in range(size)]
    return strongly_stable_closure(MonomialSpace(d, sample))


def random_stable_ideal(n: int, max_deg: int, ngens: int, rng: random.Random,
                        kind: str = "stable") -> MonomialIdeal:
    """Stable (or strongly stable) closure of random monomials of K[x_1..x_n]."""
    seeds = []
    for _ in range(ngens):
        t = rng.randint(1, max_deg)
        seeds.append(Monomial.from_indices(rng.randrange(n) for _ in range(t)))
    return ideal_closure(seeds, n, kind)


def strongly_stable_ideals(n: int, d: int, cap: int = SUBSET_CAP) -> Iterator[MonomialIdeal]:
    """Every strongly stable ideal of K[x_1..x_n] generated in degree d."""
    index = SpaceIndex(d, n - 1, cap)
    masks = index.all_masks(1)
    for mask in masks[index.closed(masks, index.strong)]:
        yield MonomialIdeal(n, tuple(index.space(int(mask)).members), "x1")
