import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hinak import validate_kupisch
from hinak.combinatorics import (
    canonicalize,
    cycle_vertices,
    enumerate_ct_labels,
    f_map,
    is_ordered_sequence,
)
from hinak.ct import is_projective, module_dimension
from hinak.homology import (
    FinitePd,
    InfinitePd,
    d_syzygy_step,
    extended_f,
    proj_dim_class,
    stable_shift_witness,
)
from hinak.singularity import in_index_set
from strategies import kupisch_series, series_and_label

FLAGSHIP = validate_kupisch(2, [3, 4, 4, 4, 4])


def test_syzygy_step_example():
    step = d_syzygy_step(FLAGSHIP, (2, 3, 4))
    assert step.kernel == (4, 7, 8)
    assert step.terms == ((4, 8, 9), (4, 7, 9))


def test_syzygy_step_of_projective_has_no_kernel():
    step = d_syzygy_step(FLAGSHIP, (3, 5, 8))
    assert step.kernel is None and step.terms == ()


def test_extended_f_examples():
    assert extended_f(FLAGSHIP, (3, 5, 8)) is None  # projective: f(8) = 3 = x_1
    assert extended_f(FLAGSHIP, (2, 3, 4)) == (2, 3, 4)  # fixed point
    assert extended_f(FLAGSHIP, None) is None


def test_proj_dim_class_examples():
    assert proj_dim_class(FLAGSHIP, (3, 5, 8)) == FinitePd(0)
    assert isinstance(proj_dim_class(FLAGSHIP, (1, 2, 3)), FinitePd)
    assert proj_dim_class(FLAGSHIP, (2, 3, 4)) == InfinitePd(3)


def test_stable_shift_witness_examples():
    assert stable_shift_witness(FLAGSHIP) == (1, -1)
    assert stable_shift_witness(validate_kupisch(1, [5, 6, 7, 6])) == (2, -3)


@given(st.integers(1, 3), st.integers(1, 6), st.integers(2, 5))
def test_stable_shift_witness_self_injective(d, n, ell):
    K = validate_kupisch(d, [ell] * n)
    s, t = stable_shift_witness(K)
    assert s == n // math.gcd(n, ell + d - 1)
    assert t * n == -s * (ell + d - 1)


@given(series_and_label())
def test_exact_sequence_euler_sum_vanishes(Kx):
    K, x = Kx
    step = d_syzygy_step(K, x)
    if step.kernel is None:
        return
    total = module_dimension(K, x)
    sign = -1
    for term in step.terms:
        assert is_projective(K, term)
        total += sign * module_dimension(K, term)
        sign = -sign
    total += sign * module_dimension(K, step.kernel)
    assert total == 0


@given(series_and_label())
def test_iterated_syzygy_realizes_extended_f(Kx):
    K, x = Kx
    target = extended_f(K, x)
    if target is None:
        return
    cur = x
    for _ in range(K.d + 1):
        step = d_syzygy_step(K, cur)
        assert step.kernel is not None
        cur = step.kernel
    assert cur == target


@given(series_and_label())
def test_extended_f_lands_in_the_label_set(Kx):
    K, x = Kx
    out = extended_f(K, x)
    if out is not None:
        assert is_ordered_sequence(K, out, "ct")
        assert 1 <= out[0] <= K.n


@given(kupisch_series(max_d=2, max_n=4, max_ell=4))
def test_wide_closure_under_syzygy(K):
    for x in enumerate_ct_labels(K):
        if not all(in_index_set(K, c) for c in x) or is_projective(K, x):
            continue
        kernel = d_syzygy_step(K, x).kernel
        assert all(in_index_set(K, c) for c in kernel)
        assert not is_projective(K, kernel)


@given(kupisch_series(max_d=2, max_n=4, max_ell=4))
def test_wide_labels_return_after_the_witness_period(K):
    s, _ = stable_shift_witness(K)
    for x in enumerate_ct_labels(K):
        if not all(in_index_set(K, c) for c in x) or is_projective(K, x):
            continue
        cur = x
        for _ in range((K.d + 1) * s):
            cur = d_syzygy_step(K, cur).kernel
            assert cur is not None
        assert cur == x
