"""Monomials over the variable family x_0, x_1, ... and finite monomial spaces.

Internally every monomial is 0-based.  The 1-based ring K[x_1..x_n] is only a
labelling choice made at the text/JSON boundary (``offset=1``).
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Monomial",
    "MonomialSpace",
    "make_monomial",
    "max_index",
    "deglex_key",
    "deglex_compare",
    "monomials_of_degree",
    "w_profile",
    "complement_in_degree",
    "parse_monomial",
    "format_monomial",
]

_FACTOR = re.compile(r"([a-z])(\d+)(?:\^(\d+))?")


def _strip(exps: Iterable[int]) -> tuple[int, ...]:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


@dataclass(frozen=True, slots=True)
class Monomial:
    """A monomial stored as its dense exponent vector, trailing zeros dropped.

    ``Monomial((2, 1))`` is x_0^2 x_1.  Equality and hashing go through the
    exponent vector, so two constructions of the same monomial always agree.
    """

    exps: tuple[int, ...] = ()

    def __post_init__(self):
        exps = _strip(self.exps)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {self.exps}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> Monomial:
        indices = list(indices)
        if any(i < 0 for i in indices):
            raise ValueError("variable indices must be natural numbers")
        exps = [0] * (max(indices) + 1 if indices else 0)
        for i in indices:
            exps[i] += 1
        return cls(tuple(exps))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> Monomial:
        exps: dict[int, int] = {}
        for idx, e in pairs:
            if idx < 0 or e < 0:
                raise ValueError(f"bad factor [{idx}, {e}]")
            exps[idx] = exps.get(idx, 0) + e
        dense = [0] * (max(exps) + 1 if exps else 0)
        for idx, e in exps.items():
            dense[idx] = e
        return cls(tuple(dense))

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def indices(self) -> tuple[int, ...]:
        """Sorted index tuple (i_1 <= ... <= i_d)."""
        return tuple(i for i, e in enumerate(self.exps) for _ in range(e))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exps) if e)

    def exponent(self, i: int) -> int:
        return self.exps[i] if i < len(self.exps) else 0

    def exponent_map(self) -> dict[int, int]:
        return {i: e for i, e in enumerate(self.exps) if e}

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def divides(self, other: Monomial) -> bool:
        if len(self.exps) > len(other.exps):
            return False
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other: Monomial) -> Monomial:
        n = max(len(self.exps), len(other.exps))
        return Monomial(tuple(self.exponent(i) + other.exponent(i) for i in range(n)))

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(self.exponent(i) - other.exponent(i) for i in range(len(self.exps))))

    def shifted(self, k: int) -> Monomial:
        """Reindex x_i -> x_{i+k} (k may be negative if nothing falls below 0)."""
        if k < 0 and any(self.exps[:-k]):
            raise ValueError(f"cannot shift {self} down by {-k}")
        if k >= 0:
            return Monomial((0,) * k + self.exps)
        return Monomial(self.exps[-k:])

    def move(self, j: int, i: int, k: int = 1) -> Monomial:
        """Replace x_j^k by x_i^k."""
        n = max(len(self.exps), i + 1)
        exps = list(self.exps) + [0] * (n - len(self.exps))
        if exps[j] < k:
            raise ValueError(f"x_{j}^{k} does not divide {self}")
        exps[j] -= k
        exps[i] += k
        return Monomial(tuple(exps))

    def __str__(self) -> str:
        return format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r})"

    def to_json(self, offset: int = 0) -> list[list[int]]:
        return [[i + offset, e] for i, e in enumerate(self.exps) if e]


def make_monomial(indices: Iterable[int]) -> Monomial:
    return Monomial.from_indices(indices)


def max_index(u: Monomial) -> int:
    if u.degree == 0:
        raise ValueError("max_index undefined for the unit")
    return len(u.exps) - 1


def deglex_key(u: Monomial) -> tuple:
    # For equal degrees the stripped vectors compare correctly as tuples:
    # a proper prefix would force a degree mismatch.
    return (u.degree, u.exps)


def deglex_compare(u: Monomial, v: Monomial) -> int:
    """-1, 0, 1 as u is smaller, equal, larger than v (x_0 > x_1 > ...)."""
    ku, kv = deglex_key(u), deglex_key(v)
    return (ku > kv) - (ku < kv)


def monomials_of_degree(d: int, max_idx: int) -> Iterator[Monomial]:
    """Degree-d monomials in x_0..x_{max_idx}, deglex descending."""
    if max_idx < 0:
        return iter(())
    return iter(_degree_block(d, max_idx))


@lru_cache(maxsize=256)
def _degree_block(d: int, max_idx: int) -> tuple[Monomial, ...]:
    # combinations_with_replacement yields sorted index tuples in lex order,
    # which is exactly deglex-descending order on the monomials
    return tuple(Monomial.from_indices(idx)
                 for idx in itertools.combinations_with_replacement(range(max_idx + 1), d))


def parse_monomial(text: str, offset: int = 0, letter: str = "x") -> Monomial:
    """Parse ``x0^2 x1`` (spaces optional, ``1`` is the unit).

    ``offset`` is subtracted from each printed index, so ``offset=1`` reads the
    1-based labelling of K[x_1..x_n].
    """
    text = text.strip()
    if text in ("", "1"):
        return Monomial()
    pos = 0
    pairs = []
    compact = text.replace(" ", "").replace("*", "")
    for m in _FACTOR.finditer(compact):
        if m.start() != pos or m.group(1) != letter:
            raise ValueError(f"cannot parse monomial {text!r}")
        pos = m.end()
        idx = int(m.group(2)) - offset
        if idx < 0:
            raise ValueError(f"index {m.group(2)} below {offset} in {text!r}")
        pairs.append((idx, int(m.group(3) or 1)))
    if pos != len(compact):
        raise ValueError(f"cannot parse monomial {text!r}")
    return Monomial.from_pairs(pairs)


def format_monomial(u: Monomial, offset: int = 0, letter: str = "x") -> str:
    if u.degree == 0:
        return "1"
    parts = []
    for i, e in enumerate(u.exps):
        if e:
            parts.append(f"{letter}{i + offset}" + (f"^{e}" if e > 1 else ""))
    return " ".join(parts)


class MonomialSpace:
    """A finite set of degree-d monomials, i.e. the monomial basis of a subspace of S_d."""

    __slots__ = ("d", "members", "_hash")

    def __init__(self, d: int, members: Iterable[Monomial] = ()):
        if d < 1:
            raise ValueError("ambient degree must be positive")
        members = frozenset(members)
        for u in members:
            if u.degree != d:
                raise ValueError(f"{u} does not have degree {d}")
        self.d = d
        self.members = members
        self._hash = hash((d, members))

    @classmethod
    def parse(cls, d: int, texts: Iterable[str], offset: int = 0) -> MonomialSpace:
        return cls(d, (parse_monomial(t, offset) for t in texts))

    def __contains__(self, u: Monomial) -> bool:
        return u in self.members

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialSpace):
            return NotImplemented
        return self.d == other.d and self.members == other.members

    def __hash__(self) -> int:
        return self._hash

    def __le__(self, other: MonomialSpace) -> bool:
        return self.d == other.d and self.members <= other.members

    def __or__(self, other: MonomialSpace) -> MonomialSpace:
        return MonomialSpace(self.d, self.members | other.members)

    def sorted(self) -> list[Monomial]:
        """Members in deglex-descending order."""
        return sorted(self.members, key=deglex_key, reverse=True)

    @property
    def max_index(self) -> int | None:
        if not self.members:
            return None
        return max(len(u.exps) - 1 for u in self.members)

    def restrict(self, max_idx: int) -> MonomialSpace:
        return MonomialSpace(self.d, (u for u in self.members if len(u.exps) - 1 <= max_idx))

    def __repr__(self) -> str:
        body = ", ".join(format_monomial(u) for u in self.sorted())
        return f"MonomialSpace(d={self.d}, <{body}>)"


def w_profile(V: MonomialSpace) -> tuple[int, ...]:
    """Counts of members by max index: entry i is w_i(V); empty tuple for V = 0."""
    M = V.max_index
    if M is None:
        return ()
    w = [0] * (M + 1)
    for u in V.members:
        w[len(u.exps) - 1] += 1
    return tuple(w)


def complement_in_degree(V: MonomialSpace, max_idx: int) -> MonomialSpace:
    """Monomials of degree d with max index <= max_idx that are not in V."""
    if max_idx < 0:
        raise ValueError("max_idx must be a natural number")
    return MonomialSpace(V.d, (u for u in monomials_of_degree(V.d, max_idx) if u not in V.members))
