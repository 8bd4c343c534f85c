import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hinak import validate_kupisch
from hinak.combinatorics import (
    canonicalize,
    cycle_vertices,
    enumerate_ct_labels,
    enumerate_vertices,
    f_bar,
    f_map,
    interleaves,
    is_ordered_sequence,
    sigma_shift,
)
from hinak.errors import (
    BadArity,
    Disconnected,
    NonPeriodicKupisch,
    NotIncreasing,
    OutOfRange,
)
from strategies import kupisch_series, series_and_label, series_and_labels

FLAGSHIP = validate_kupisch(2, [3, 4, 4, 4, 4])


def test_validate_accepts_the_showcase_series():
    K = validate_kupisch(2, [3, 4, 4, 4, 4])
    assert K.n == 5 and K.ell == (3, 4, 4, 4, 4)


def test_validate_accepts_constant_series():
    assert validate_kupisch(3, [2, 2, 2]).ell == (2, 2, 2)


def test_validate_rejects_jump_of_two():
    with pytest.raises(NonPeriodicKupisch):
        validate_kupisch(1, [2, 4])


def test_validate_rejects_wraparound_jump():
    # fine pointwise until the wrap: ell_1 = 4 > ell_3 + 1 = 3
    with pytest.raises(NonPeriodicKupisch):
        validate_kupisch(1, [4, 4, 2])


def test_validate_rejects_loewy_length_one():
    with pytest.raises(Disconnected):
        validate_kupisch(1, [1, 2])


def test_validate_rejects_bad_arity():
    with pytest.raises(BadArity):
        validate_kupisch(0, [2, 2])
    with pytest.raises(BadArity):
        validate_kupisch(1, [])


def test_f_map_examples():
    assert f_map(FLAGSHIP, 1) == -3
    assert f_map(validate_kupisch(1, [5, 6, 7, 6]), 2) == -4
    assert f_map(FLAGSHIP, 6) == f_map(FLAGSHIP, 1) + 5 == 2


def test_f_bar_examples():
    assert f_bar(FLAGSHIP, 1) == 2
    assert f_bar(validate_kupisch(1, [5, 6, 7, 6]), 4) == 2


def test_f_bar_constant_series_is_a_cyclic_shift():
    K = validate_kupisch(2, [4, 4, 4, 4, 4, 4])
    shift = 4 + 2 - 1
    for i in range(1, 7):
        assert f_bar(K, i) == (i - shift - 1) % 6 + 1


def test_f_bar_range_check():
    with pytest.raises(OutOfRange):
        f_bar(FLAGSHIP, 0)
    with pytest.raises(OutOfRange):
        f_bar(FLAGSHIP, 6)


def test_ordered_sequence_examples():
    assert is_ordered_sequence(FLAGSHIP, (3, 5, 8), "ct")
    # the vertex (1,5) is absent: 5 - 1 + 1 = 5 exceeds ell_6 + 1 = 4
    assert not is_ordered_sequence(FLAGSHIP, (1, 5), "vertex")
    assert is_ordered_sequence(FLAGSHIP, (1, 4), "vertex")


def test_ordered_sequence_consecutive_always_valid():
    for K in (FLAGSHIP, validate_kupisch(1, [2]), validate_kupisch(3, [2, 2])):
        assert is_ordered_sequence(K, tuple(range(1, K.d + 2)), "ct")


def test_ordered_sequence_arity_enforced():
    with pytest.raises(BadArity):
        is_ordered_sequence(FLAGSHIP, (1, 2, 5), "vertex")
    with pytest.raises(NotIncreasing):
        is_ordered_sequence(FLAGSHIP, (3, 3, 5), "ct")


def test_interleaves_examples():
    assert interleaves((3, 5, 8), (3, 6, 8))
    assert interleaves((3, 5, 8), (3, 5, 8))
    assert not interleaves((3, 5, 8), (8, 11, 13))
    with pytest.raises(BadArity):
        interleaves((1, 2), (1, 2, 3))


def test_sigma_shift_examples():
    assert sigma_shift((3, 6, 8), 1, 5) == (-2, 1, 3)
    assert sigma_shift((3, 6, 8), 0, 5) == (3, 6, 8)
    assert sigma_shift((3, 6, 8), -1, 5) == (8, 11, 13)


def test_canonicalize_examples():
    assert canonicalize((-1, 2, 3), 5) == (4, 7, 8)
    assert canonicalize((3, 5, 8), 5) == (3, 5, 8)
    assert canonicalize((11, 12, 14), 5) == (1, 2, 4)


def test_enumeration_counts():
    assert len(enumerate_ct_labels(FLAGSHIP)) == 46
    assert len(enumerate_vertices(FLAGSHIP)) == 19
    K43 = validate_kupisch(2, [3, 3, 3, 3])
    assert len(enumerate_ct_labels(K43)) == 24
    assert len(enumerate_vertices(K43)) == 12
    assert enumerate_ct_labels(validate_kupisch(1, [2])) == ((1, 2), (1, 3))
    assert len(enumerate_vertices(validate_kupisch(1, [7]))) == 1


@given(kupisch_series(), st.integers(-20, 20))
def test_f_is_periodic_and_monotone(K, i):
    assert f_map(K, i + K.n) == f_map(K, i) + K.n
    assert f_map(K, i) >= f_map(K, i - 1)


@given(series_and_label(), st.integers(-3, 3))
def test_canonicalize_absorbs_sigma(Kx, i):
    K, x = Kx
    assert canonicalize(sigma_shift(x, i, K.n), K.n) == x
    assert canonicalize(x, K.n) == x


@given(series_and_labels(count=3))
def test_interleaves_is_a_partial_order(Kxyz):
    _, x, y, z = Kxyz
    assert interleaves(x, x)
    if interleaves(x, y) and interleaves(y, x):
        assert x == y
    if interleaves(x, y) and interleaves(y, z):
        assert interleaves(x, z)


@given(kupisch_series())
def test_enumerations_are_canonical_valid_and_duplicate_free(K):
    labels = enumerate_ct_labels(K)
    assert len(set(labels)) == len(labels) == len(sorted(labels))
    for x in labels:
        assert 1 <= x[0] <= K.n
        assert is_ordered_sequence(K, x, "ct")
    for v in enumerate_vertices(K):
        assert 1 <= v[0] <= K.n
        assert is_ordered_sequence(K, v, "vertex")


@given(st.integers(1, 3), st.integers(1, 6), st.integers(2, 5))
def test_self_injective_f_bar_is_a_bijection(d, n, ell):
    K = validate_kupisch(d, [ell] * n)
    image = {f_bar(K, i) for i in range(1, n + 1)}
    assert image == set(range(1, n + 1))
    assert cycle_vertices(K) == tuple(range(1, n + 1))
