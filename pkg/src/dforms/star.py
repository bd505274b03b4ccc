"""The *-product on degree-d monomials and the graded isomorphisms with K[y_1..y_d].

For u = x_{i_1}...x_{i_d} and v = x_{j_1}...x_{j_d} (indices sorted) the product
u*v = x_{i_1+j_1}...x_{i_d+j_d} makes S_d a standard graded algebra, graded by
max index, generated by x_0^{d-1}x_1, ..., x_1^d.  ``phi`` sends y_i to
x_0^{i-1}x_1^{d+1-i} and ``psi`` is its inverse.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .monomial import Monomial, MonomialSpace, complement_in_degree, max_index

__all__ = [
    "YMonomial",
    "star",
    "algebra_generators",
    "phi",
    "psi",
    "factorize",
    "is_complement_ideal",
    "y_monomials",
]

_Y_FACTOR = re.compile(r"y(\d+)(?:\^(\d+))?")


@dataclass(frozen=True, slots=True)
class YMonomial:
    """y_1^{b_1}...y_d^{b_d}, kept as the full length-d exponent vector."""

    d: int
    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exps)
        if len(exps) != self.d or any(b < 0 for b in exps):
            raise ValueError(f"need {self.d} natural exponents, got {exps}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def unit(cls, d: int) -> YMonomial:
        return cls(d, (0,) * d)

    @classmethod
    def var(cls, d: int, i: int) -> YMonomial:
        """y_i, 1-based."""
        if not 1 <= i <= d:
            raise ValueError(f"y_{i} is not a variable of K[y_1..y_{d}]")
        return cls(d, tuple(int(k == i - 1) for k in range(d)))

    @classmethod
    def from_monomial(cls, d: int, u: Monomial) -> YMonomial:
        """Read position k of ``u`` as the exponent of y_{k+1}."""
        if len(u.exps) > d:
            raise ValueError(f"{u} uses more than {d} variables")
        return cls(d, u.exps + (0,) * (d - len(u.exps)))

    @classmethod
    def parse(cls, d: int, text: str) -> YMonomial:
        text = text.strip().replace(" ", "").replace("*", "")
        exps = [0] * d
        if text in ("", "1"):
            return cls(d, tuple(exps))
        pos = 0
        for m in _Y_FACTOR.finditer(text):
            if m.start() != pos:
                break
            pos = m.end()
            i = int(m.group(1))
            if not 1 <= i <= d:
                raise ValueError(f"y{i} out of range for d={d}")
            exps[i - 1] += int(m.group(2) or 1)
        if pos != len(text):
            raise ValueError(f"cannot parse y-monomial {text!r}")
        return cls(d, tuple(exps))

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def as_monomial(self) -> Monomial:
        return Monomial(self.exps)

    def __mul__(self, other: YMonomial) -> YMonomial:
        if self.d != other.d:
            raise ValueError("y-monomials live in different rings")
        return YMonomial(self.d, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __str__(self) -> str:
        if not any(self.exps):
            return "1"
        return " ".join(f"y{i + 1}" + (f"^{b}" if b > 1 else "") for i, b in enumerate(self.exps) if b)

    def to_json(self) -> list[int]:
        return list(self.exps)


def y_monomials(d: int, degree: int) -> Iterator[YMonomial]:
    """All degree-e monomials of K[y_1..y_d], lex descending (y_1 > ... > y_d)."""
    for u in _compositions(degree, d):
        yield YMonomial(d, u)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def star(u: Monomial, v: Monomial) -> Monomial:
    d = u.degree
    if v.degree != d:
        raise ValueError("star requires equal degrees")
    if d < 1:
        raise ValueError("star is defined on S_d with d >= 1")
    return _star(u, v)


@lru_cache(maxsize=1 << 16)
def _star(u: Monomial, v: Monomial) -> Monomial:
    # pairs the two sorted index sequences position by position
    return Monomial.from_indices(i + j for i, j in zip(u.indices, v.indices))


def algebra_generators(d: int) -> list[Monomial]:
    """x_0^{d-1}x_1, x_0^{d-2}x_1^2, ..., x_1^d."""
    if d < 1:
        raise ValueError("d must be positive")
    return [Monomial((d - i, i)) for i in range(1, d + 1)]


def phi(w: YMonomial) -> Monomial:
    indices, s = [], 0
    for b in w.exps:
        s += b
        indices.append(s)
    return Monomial.from_indices(indices)


def psi(u: Monomial, d: int | None = None) -> YMonomial:
    if d is None:
        d = u.degree
    if u.degree != d or d < 1:
        raise ValueError(f"psi expects a monomial of degree {d}, got {u}")
    exps = [0] * d
    s = 0
    # one factor y_{a_0+...+a_{k-1}+1} for k = 1..e
    for a in u.exps[:-1]:
        s += a
        exps[s] += 1
    return YMonomial(d, tuple(exps))


def factorize(u: Monomial) -> list[Monomial]:
    """Write u as a *-product of max_index(u) degree-one elements x_0^i x_1^{d-i}."""
    d = u.degree
    e = max_index(u)
    a = u.exps
    factors = []
    head = 0
    for k in range(1, e + 1):
        head += a[k - 1]
        factors.append(Monomial((head, d - head)))
    return factors


def is_complement_ideal(V: MonomialSpace) -> bool:
    """Whether the complementary space V^c is an ideal of (S_d, *).

    Only complement elements with max index <= max_index(V) need checking.
    S_d is generated in grade one, so closure under multiplication by the
    generators suffices; and any monomial of larger max index lies in V^c
    together with all its *-multiples, since * never lowers the max index.
    """
    M = V.max_index
    if M is None:
        return True
    gens = algebra_generators(V.d)
    for u in complement_in_degree(V, M).members:
        for g in gens:
            if star(u, g) in V.members:
                return False
    return True
