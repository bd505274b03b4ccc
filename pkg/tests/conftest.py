import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from dforms.monomial import Monomial
from dforms.star import YMonomial

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def monomials(draw, d=None, max_idx=6, min_degree=1, max_degree=5):
    if d is None:
        d = draw(st.integers(min_degree, max_degree))
    idx = draw(st.lists(st.integers(0, max_idx), min_size=d, max_size=d))
    return Monomial.from_indices(idx)


@st.composite
def same_degree(draw, count, max_idx=6, max_degree=5):
    d = draw(st.integers(1, max_degree))
    return [draw(monomials(d=d, max_idx=max_idx)) for _ in range(count)]


@st.composite
def y_monomials(draw, d, max_exp=4):
    return YMonomial(d, tuple(draw(st.lists(st.integers(0, max_exp), min_size=d, max_size=d))))
