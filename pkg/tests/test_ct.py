import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hinak import validate_kupisch
from hinak.combinatorics import (
    canonicalize,
    enumerate_ct_labels,
    enumerate_vertices,
    interleaves,
)
from hinak.ct import (
    BasisMorphism,
    HomWindow,
    basis_morphism_valid,
    compose_basis,
    ct_quiver,
    dimension_vector,
    gabriel_quiver,
    hom_dim,
    hom_window,
    identity_morphism,
    is_injective,
    is_projective,
    is_simple,
    module_dimension,
    projective_label_with_top,
    socle_vertex,
    tau_d,
    top_vertex,
)
from hinak.errors import Mismatch, NotCTLabel, ProjectiveInput
from strategies import kupisch_series, series_and_label, series_and_labels

FLAGSHIP = validate_kupisch(2, [3, 4, 4, 4, 4])
SELFINJ = validate_kupisch(2, [3, 3, 3, 3])


def test_is_projective_examples():
    assert is_projective(FLAGSHIP, (3, 5, 8))
    assert not is_projective(FLAGSHIP, (2, 3, 4))
    # self-injective: exactly the labels of maximal span are projective
    for x in enumerate_ct_labels(SELFINJ):
        assert is_projective(SELFINJ, x) == (x[-1] - x[0] + 1 == 3 + 2)


def test_is_injective_examples():
    assert is_injective(FLAGSHIP, (1, 2, 5))
    assert not is_injective(FLAGSHIP, (2, 3, 4))
    for x in enumerate_ct_labels(SELFINJ):
        assert is_injective(SELFINJ, x) == is_projective(SELFINJ, x)


def test_is_simple_examples():
    assert is_simple(FLAGSHIP, (2, 3, 4))
    assert not is_simple(FLAGSHIP, (3, 5, 8))
    assert is_simple(validate_kupisch(1, [2]), (1, 2))


def test_top_and_socle_examples():
    assert top_vertex(FLAGSHIP, (3, 5, 8)) == (4, 7)
    assert socle_vertex(FLAGSHIP, (3, 5, 8)) == (3, 5)
    assert top_vertex(FLAGSHIP, (2, 3, 4)) == (2, 3) == socle_vertex(FLAGSHIP, (2, 3, 4))


def test_tau_examples():
    assert tau_d(FLAGSHIP, (2, 3, 4)) == (1, 2, 3)
    assert tau_d(FLAGSHIP, (1, 4, 5)) == (5, 8, 9)
    with pytest.raises(ProjectiveInput):
        tau_d(FLAGSHIP, (3, 5, 8))


def test_ct_label_validation():
    with pytest.raises(NotCTLabel):
        is_projective(FLAGSHIP, (1, 2))  # wrong arity
    with pytest.raises(NotCTLabel):
        is_projective(FLAGSHIP, (6, 7, 8))  # not canonical
    with pytest.raises(NotCTLabel):
        is_projective(FLAGSHIP, (1, 2, 9))  # span too large


def test_hom_window_examples():
    assert hom_window(FLAGSHIP, (3, 5, 8), (3, 6, 8)) == HomWindow(0, 0)
    assert hom_window(FLAGSHIP, (1, 2, 3), (4, 5, 6)) is None
    for ell in (2, 3, 5):
        K = validate_kupisch(1, [ell])
        regular = (1, ell + 1)
        assert hom_dim(K, regular, regular) == ell


def test_compose_basis_identity_and_grades():
    f = BasisMorphism((3, 5, 8), (3, 6, 8), 0)
    assert compose_basis(FLAGSHIP, f, identity_morphism((3, 5, 8))) == f
    assert compose_basis(FLAGSHIP, identity_morphism((3, 6, 8)), f) == f
    with pytest.raises(Mismatch):
        compose_basis(FLAGSHIP, f, f)


def test_compose_basis_zero_example():
    f = BasisMorphism((2, 3, 4), (2, 4, 5), 0)
    g = BasisMorphism((2, 4, 5), (3, 4, 6), 0)
    # (2,3,4) does not interleave (3,4,6): 2 <= 3 but 3 < 3 fails
    assert compose_basis(FLAGSHIP, g, f) is None


@given(series_and_labels(count=3, max_d=2, max_n=4, max_ell=4))
def test_compose_basis_grades_add_and_associate(Kxyz):
    K, x, y, z = Kxyz
    wxy, wyz = hom_window(K, x, y), hom_window(K, y, z)
    if wxy is None or wyz is None:
        return
    for i in range(wxy.a, wxy.b + 1):
        for j in range(wyz.a, wyz.b + 1):
            f = BasisMorphism(x, y, i)
            g = BasisMorphism(y, z, j)
            out = compose_basis(K, g, f)
            if out is not None:
                assert out.grade == i + j
                assert basis_morphism_valid(K, out)


@given(series_and_labels(count=4, max_d=2, max_n=4, max_ell=4))
def test_compose_basis_is_associative(Kwxyz):
    K, w, x, y, z = Kwxyz

    def window_grades(a, b):
        win = hom_window(K, a, b)
        return [] if win is None else [win.a, win.b]

    for i in window_grades(w, x):
        for j in window_grades(x, y):
            for k in window_grades(y, z):
                f = BasisMorphism(w, x, i)
                g = BasisMorphism(x, y, j)
                h = BasisMorphism(y, z, k)
                gf = compose_basis(K, g, f)
                hg = compose_basis(K, h, g)
                left = None if gf is None else compose_basis(K, h, gf)
                right = None if hg is None else compose_basis(K, hg, f)
                assert left == right


def test_dimension_vector_examples():
    dims = dimension_vector(FLAGSHIP, (3, 5, 8))
    support = {v for v, m in dims.items() if m}
    assert support == {(3, 5), (3, 6), (3, 7), (4, 5), (4, 6), (4, 7)}
    assert all(dims[v] == 1 for v in support)
    assert module_dimension(FLAGSHIP, (3, 5, 8)) == 6

    simple = dimension_vector(FLAGSHIP, (2, 3, 4))
    assert simple[(2, 3)] == 1 and sum(simple.values()) == 1

    K = validate_kupisch(1, [4])
    assert dimension_vector(K, (1, 5)) == {(1,): 4}


@given(series_and_label())
def test_dimension_vector_totals_match_the_box(Kx):
    K, x = Kx
    dims = dimension_vector(K, x)
    assert sum(dims.values()) == module_dimension(K, x)
    assert module_dimension(K, x) == math.prod(b - a for a, b in zip(x, x[1:]))


@given(series_and_labels(count=2, max_d=2, max_n=4, max_ell=4))
def test_grade_zero_interleaving_gives_a_nonzero_hom(Kxy):
    K, x, y = Kxy
    if interleaves(x, y):
        win = hom_window(K, x, y)
        assert win is not None and win.a <= 0 <= win.b


def test_quiver_counts():
    assert len(gabriel_quiver(FLAGSHIP).vertices) == 19
    assert len(gabriel_quiver(SELFINJ).vertices) == 12
    assert len(ct_quiver(SELFINJ).vertices) == 24
    loop = gabriel_quiver(validate_kupisch(1, [4]))
    assert loop.vertices == ((1,),)
    assert loop.arrows == (((1,), 1, (1,)),)


@given(kupisch_series(max_d=3, max_n=4, max_ell=4))
def test_quiver_arrows_are_coordinate_bumps(K):
    for quiver in (gabriel_quiver(K), ct_quiver(K)):
        vset = set(quiver.vertices)
        for src, i, dst in quiver.arrows:
            assert src in vset and dst in vset
            bumped = src[: i - 1] + (src[i - 1] + 1,) + src[i:]
            assert canonicalize(bumped, K.n) == dst


@given(series_and_label())
def test_projective_label_with_top_inverts_top_vertex(Kx):
    K, x = Kx
    v = top_vertex(K, x)
    proj = projective_label_with_top(K, v)
    assert is_projective(K, proj)
    assert top_vertex(K, proj) == v
