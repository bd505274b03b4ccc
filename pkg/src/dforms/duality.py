"""Two dualities for strongly stable ideals generated in one degree d.

* ``matteo_dual``: V -> psi(V^c), a strongly stable ideal of K[y_1..y_d] of
  finite colength whose standard monomials are psi(V).
* ``murai_dual``: stretch, Alexander dual, compress.

``duality_agree`` compares the two up to degree n.
"""
from __future__ import annotations

from .ideal import MonomialIdeal, all_monomials
from .monomial import Monomial, MonomialSpace
from .stability import (
    is_squarefree_strongly_stable,
    is_strongly_stable,
    is_strongly_stable_ideal,
)
from .star import YMonomial, phi, psi

__all__ = [
    "matteo_dual",
    "matteo_dual_inverse",
    "stretch",
    "stretch_ideal",
    "compress",
    "compress_ideal",
    "minimal_transversals",
    "alexander_dual",
    "murai_dual",
    "duality_agree",
    "shift_to_space",
]


def matteo_dual(V: MonomialSpace, m: int | None = None) -> MonomialIdeal:
    """The y-side ideal whose standard monomials are exactly psi(V)."""
    if not V.members:
        raise ValueError("the zero space has no dual ideal")
    if not is_strongly_stable(V):
        raise ValueError("matteo_dual requires a strongly stable space")
    d = V.d
    if m is None:
        m = V.max_index
    if V.max_index > m:
        raise ValueError(f"V has max index {V.max_index} > m = {m}")
    standard = {psi(u).as_monomial() for u in V.members}
    gens = []
    for e in range(m + 2):
        for g in all_monomials(d, e):
            if g in standard:
                continue
            if all(g / Monomial.from_indices([j]) in standard for j in g.support):
                gens.append(g)
    J = MonomialIdeal(d, tuple(gens), "y")
    assert is_strongly_stable_ideal(J)
    assert J.has_finite_colength()
    assert all(g.degree <= m + 1 for g in J.gens)
    return J


def matteo_dual_inverse(J: MonomialIdeal) -> tuple[MonomialSpace, int]:
    """(phi(standard monomials of J), their largest degree)."""
    if not is_strongly_stable_ideal(J):
        raise ValueError("matteo_dual_inverse requires a strongly stable ideal")
    if J.is_unit():
        raise ValueError("the unit ideal has no standard monomials")
    d = J.nvars
    std = J.all_standard_monomials()  # raises unless height d
    V = MonomialSpace(d, (phi(YMonomial.from_monomial(d, u)) for u in std))
    return V, max(u.degree for u in std)


def stretch(u: Monomial) -> Monomial:
    """x_{i_1} x_{i_2+1} ... x_{i_d+d-1}; the shift is position-based, so any fixed labelling offset passes through."""
    return Monomial.from_indices(i + k for k, i in enumerate(u.indices))


def compress(v: Monomial) -> Monomial:
    if not v.is_squarefree():
        raise ValueError(f"compress needs a squarefree monomial, got {v}")
    return Monomial.from_indices(j - k for k, j in enumerate(v.indices))


def stretch_ideal(I: MonomialIdeal) -> MonomialIdeal:
    degrees = I.degrees
    if len(degrees) != 1:
        raise ValueError("stretching needs an ideal generated in a single degree")
    if not is_strongly_stable_ideal(I):
        raise ValueError("stretching needs a strongly stable ideal")
    d = degrees[0]
    J = MonomialIdeal(I.nvars + d - 1, tuple(stretch(g) for g in I.gens), I.convention)
    assert is_squarefree_strongly_stable(J)
    return J


def compress_ideal(J: MonomialIdeal, nvars: int | None = None, convention: str | None = None) -> MonomialIdeal:
    gens = tuple(compress(g) for g in J.gens)
    if nvars is None:
        nvars = max((len(g.exps) for g in gens), default=1)
    return MonomialIdeal(nvars, gens, convention or J.convention)


def minimal_transversals(edges: list[int]) -> list[int]:
    """Inclusion-minimal hitting sets of a family of sets given as bitmasks."""
    if any(e == 0 for e in edges):
        return []  # nothing hits the empty set
    found: set[int] = set()

    def branch(chosen: int, remaining: list[int]) -> None:
        if any(f & chosen == f for f in found):
            return  # chosen already contains a known hitting set
        uncovered = [e for e in remaining if not e & chosen]
        if not uncovered:
            found.add(chosen)
            return
        edge = min(uncovered, key=lambda e: bin(e).count("1"))
        bit = edge
        while bit:
            low = bit & -bit
            branch(chosen | low, uncovered)
            bit ^= low

    branch(0, list(edges))
    return sorted(h for h in found if not any(g != h and g & h == g for g in found))


def alexander_dual(J: MonomialIdeal) -> MonomialIdeal:
    """Generators of J^v are the minimal transversals of the generator supports."""
    if not J.is_squarefree():
        raise ValueError("Alexander duality needs a squarefree ideal")
    edges = [sum(1 << i for i in g.support) for g in J.gens]
    gens = []
    for h in minimal_transversals(edges):
        gens.append(Monomial.from_indices(i for i in range(J.nvars) if h >> i & 1))
    return MonomialIdeal(J.nvars, tuple(gens), J.convention)


def murai_dual(I: MonomialIdeal) -> MonomialIdeal:
    """((I^sigma)^v)^tau read in K[y_1..y_d]."""
    degrees = I.degrees
    if len(degrees) != 1:
        raise ValueError("murai_dual needs an ideal generated in a single degree")
    d = degrees[0]
    dual = alexander_dual(stretch_ideal(I))
    out = compress_ideal(dual, nvars=d, convention="y")
    return out


def shift_to_space(I: MonomialIdeal) -> MonomialSpace:
    """span G(I) for I generated in a single degree, with x_1..x_n relabelled x_0..x_{n-1}."""
    degrees = I.degrees
    if len(degrees) != 1:
        raise ValueError("need an ideal generated in a single degree")
    # positions are already 0-based; only the labelling changes
    return MonomialSpace(degrees[0], I.gens)


def duality_agree(I: MonomialIdeal) -> bool:
    """murai_dual(I) and matteo_dual(span G(I), n - 1) agree in degrees <= n,
    and murai_dual(I) has no minimal generator of degree > n."""
    n = I.nvars
    A = murai_dual(I)
    B = matteo_dual(shift_to_space(I), n - 1)
    d = A.nvars
    if any(g.degree > n for g in A.gens):
        return False
    for t in range(n + 1):
        for u in all_monomials(d, t):
            if (u in A) != (u in B):
                return False
    return True
