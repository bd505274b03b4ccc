"""Monomial ideals given by their minimal generators.

Generators are stored 0-based (position k is the k-th variable).  The
``convention`` tag only changes how positions are printed and parsed:

    "x0"  position k <-> x_k        (the ring S, or K[x_0..x_m])
    "x1"  position k <-> x_{k+1}    (the ring P = K[x_1..x_n])
    "y"   position k <-> y_{k+1}    (K[y_1..y_d])
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .monomial import Monomial, deglex_key, format_monomial, monomials_of_degree, parse_monomial
from .star import YMonomial

__all__ = ["MonomialIdeal", "CONVENTIONS", "minimalize", "all_monomials"]

CONVENTIONS = {"x0": ("x", 0), "x1": ("x", 1), "y": ("y", 1)}


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Drop generators divisible by another one; deglex-descending output."""
    gens = sorted(set(gens), key=deglex_key)
    kept: list[Monomial] = []
    for g in gens:  # ascending degree, so divisors come first
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept, key=deglex_key, reverse=True))


def all_monomials(nvars: int, degree: int) -> Iterator[Monomial]:
    """Degree-t monomials in the first ``nvars`` positions, deglex descending."""
    if degree == 0:
        yield Monomial()
        return
    if nvars == 0:
        return
    yield from monomials_of_degree(degree, nvars - 1)


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple[Monomial, ...]
    convention: str = "x1"

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        gens = minimalize(self.gens)
        for g in gens:
            if len(g.exps) > self.nvars:
                raise ValueError(f"generator {self.format(g)} uses more than {self.nvars} variables")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def parse(cls, nvars: int, texts: Iterable[str], convention: str = "x1") -> MonomialIdeal:
        letter, offset = CONVENTIONS[convention]
        return cls(nvars, tuple(parse_monomial(t, offset, letter) for t in texts), convention)

    @classmethod
    def from_y(cls, d: int, gens: Iterable[YMonomial]) -> MonomialIdeal:
        return cls(d, tuple(g.as_monomial() for g in gens), "y")

    def with_convention(self, convention: str) -> MonomialIdeal:
        return MonomialIdeal(self.nvars, self.gens, convention)

    def __contains__(self, u: Monomial) -> bool:
        return any(g.divides(u) for g in self.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.nvars == other.nvars and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.nvars, self.gens))

    @property
    def degrees(self) -> list[int]:
        return sorted({g.degree for g in self.gens})

    def is_unit(self) -> bool:
        return Monomial() in self.gens

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def piece(self, degree: int) -> list[Monomial]:
        return [u for u in all_monomials(self.nvars, degree) if u in self]

    def standard_monomials(self, degree: int) -> list[Monomial]:
        return [u for u in all_monomials(self.nvars, degree) if u not in self]

    def has_finite_colength(self) -> bool:
        """Every variable has a pure power among the generators (height = nvars)."""
        pure = {len(g.exps) - 1 for g in self.gens if len(g.support) == 1}
        return self.is_unit() or pure >= set(range(self.nvars))

    def all_standard_monomials(self) -> list[Monomial]:
        """Standard monomials of a finite-colength ideal, ascending degree."""
        if not self.has_finite_colength():
            raise ValueError(f"ideal does not have height {self.nvars}")
        out, t = [], 0
        while True:
            std = self.standard_monomials(t)
            if not std:
                return out
            out.extend(std)
            t += 1

    def format(self, u: Monomial) -> str:
        letter, offset = CONVENTIONS[self.convention]
        return format_monomial(u, offset, letter)

    def __str__(self) -> str:
        return "(" + ", ".join(self.format(g) for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal[{self.convention}, n={self.nvars}]{self}"

    def to_json(self) -> dict:
        if self.convention == "y":
            gens = [YMonomial.from_monomial(self.nvars, g).to_json() for g in self.gens]
        else:
            gens = [g.to_json(CONVENTIONS[self.convention][1]) for g in self.gens]
        return {"convention": self.convention, "nvars": self.nvars, "generators": gens}

    @classmethod
    def from_json(cls, obj: dict) -> MonomialIdeal:
        for key in ("convention", "nvars", "generators"):
            if key not in obj:
                raise ValueError(f"ideal JSON is missing field {key!r}")
        conv, n = obj["convention"], obj["nvars"]
        if conv not in CONVENTIONS:
            raise ValueError(f"field 'convention': unknown value {conv!r}")
        if not isinstance(n, int) or n < 1:
            raise ValueError("field 'nvars': expected a positive integer")
        letter, offset = CONVENTIONS[conv]
        gens = []
        for g in obj["generators"]:
            if isinstance(g, str):
                gens.append(parse_monomial(g, offset, letter))
            elif conv == "y" and all(isinstance(b, int) for b in g):
                gens.append(YMonomial(n, tuple(g)).as_monomial())
            else:
                pairs = [(idx - offset, e) for idx, e in g]
                if any(idx < 0 for idx, _ in pairs):
                    raise ValueError(f"field 'generators': index below {offset} for convention {conv}")
                gens.append(Monomial.from_pairs(pairs))
        return cls(n, tuple(gens), conv)
