"""Degree-d forms as a polynomial ring: stability, Macaulay bounds, linear Betti rows."""
from .monomial import Monomial, MonomialSpace, make_monomial, parse_monomial, w_profile
from .star import YMonomial, phi, psi, star
from .ideal import MonomialIdeal
from .betti import LinearBettiRow, feasible_linear

__version__ = "0.1.0"
