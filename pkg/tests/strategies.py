"""Hypothesis strategies shared by the test modules."""

from hypothesis import assume
from hypothesis import strategies as st

from hinak import validate_kupisch
from hinak.combinatorics import enumerate_ct_labels


@st.composite
def kupisch_series(draw, max_d=3, max_n=5, max_ell=5):
    """A validated series: entries step down freely but rise by at most 1."""
    d = draw(st.integers(1, max_d))
    n = draw(st.integers(1, max_n))
    ell = [draw(st.integers(2, max_ell))]
    for _ in range(n - 1):
        ell.append(draw(st.integers(2, min(max_ell, ell[-1] + 1))))
    assume(ell[0] <= ell[-1] + 1)
    return validate_kupisch(d, ell)


@st.composite
def series_and_label(draw, **kwargs):
    K = draw(kupisch_series(**kwargs))
    x = draw(st.sampled_from(enumerate_ct_labels(K)))
    return K, x


@st.composite
def series_and_labels(draw, count=2, **kwargs):
    K = draw(kupisch_series(**kwargs))
    labels = enumerate_ct_labels(K)
    picked = tuple(draw(st.sampled_from(labels)) for _ in range(count))
    return (K, *picked)
