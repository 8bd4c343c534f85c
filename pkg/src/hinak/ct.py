"""Indecomposable cluster-tilting modules M(x).

Structural predicates, the higher translate, graded hom windows with their
basis morphisms, dimension vectors over the quiver, and the Gabriel and
cluster-tilting quivers.

A module label x of arity d+1 supports a box of integer tuples
z with x_i <= z_i <= x_{i+1} - 1 in every coordinate; each box point is a
vertex of the infinite quiver and contributes one basis vector, so the
dimension at a canonical vertex v counts the sigma-translates of v inside
the box.  Morphisms M(x) -> M(y) come in integer grades i, one basis
morphism for each grade with x interleaving sigma^i(y); the grades form an
interval [a, b] and the hom space has dimension b - a + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import prod

from .combinatorics import (
    KupischSeries,
    Label,
    canonicalize,
    enumerate_ct_labels,
    enumerate_vertices,
    f_map,
    interleaves,
    length_bound_holds,
    sigma_shift,
)
from .errors import Mismatch, NotCTLabel, ProjectiveInput


def require_ct_label(K: KupischSeries, x: Label) -> None:
    """Raise NotCTLabel unless x is a canonical cluster-tilting label."""
    if len(x) != K.d + 1:
        raise NotCTLabel(f"{x} has arity {len(x)}, expected {K.d + 1}")
    if any(a >= b for a, b in zip(x, x[1:])):
        raise NotCTLabel(f"{x} is not strictly increasing")
    if not 1 <= x[0] <= K.n:
        raise NotCTLabel(f"{x} is not canonical (x_1 outside 1..{K.n})")
    if not length_bound_holds(K, x, "ct"):
        raise NotCTLabel(f"{x} violates the span bound")


def is_projective(K: KupischSeries, x: Label) -> bool:
    require_ct_label(K, x)
    return x[0] == f_map(K, x[-1])


def is_injective(K: KupischSeries, x: Label) -> bool:
    """True when the last coordinate cannot be pushed any further."""
    require_ct_label(K, x)
    extended = x[:-1] + (x[-1] + 1,)
    return not length_bound_holds(K, extended, "ct")


def is_simple(K: KupischSeries, x: Label) -> bool:
    require_ct_label(K, x)
    return all(b - a == 1 for a, b in zip(x, x[1:]))


def top_vertex(K: KupischSeries, x: Label) -> Label:
    """Vertex carrying the top of M(x): (x_2 - 1, ..., x_{d+1} - 1)."""
    require_ct_label(K, x)
    return canonicalize(tuple(c - 1 for c in x[1:]), K.n)


def socle_vertex(K: KupischSeries, x: Label) -> Label:
    """Vertex carrying the socle of M(x): (x_1, ..., x_d)."""
    require_ct_label(K, x)
    return canonicalize(x[:-1], K.n)


def tau_d(K: KupischSeries, x: Label) -> Label:
    """The higher translate: subtract 1 from every coordinate."""
    if is_projective(K, x):
        raise ProjectiveInput(f"{x} is projective")
    return canonicalize(tuple(c - 1 for c in x), K.n)


def projective_label_with_top(K: KupischSeries, v: Label) -> Label:
    """Canonical label of the indecomposable projective whose top sits at v."""
    y = (f_map(K, v[-1] + 1), *(c + 1 for c in v))
    return canonicalize(y, K.n)


@dataclass(frozen=True)
class HomWindow:
    """The grade interval [a, b] of nonzero basis morphisms x -> y."""

    a: int
    b: int

    @property
    def dim(self) -> int:
        return self.b - self.a + 1


def hom_window(K: KupischSeries, x: Label, y: Label) -> HomWindow | None:
    """Grades i with x interleaving sigma^i(y), or None when there are none."""
    require_ct_label(K, x)
    require_ct_label(K, y)
    span = (x[-1] - x[0]) + (y[-1] - y[0])
    radius = span // K.n + 2
    grades = [
        i
        for i in range(-radius, radius + 1)
        if interleaves(x, sigma_shift(y, i, K.n))
    ]
    if not grades:
        return None
    a, b = grades[0], grades[-1]
    # Each interleaving condition is a half-line in the grade, so the
    # feasible set is an interval; the scan radius must strictly contain it.
    assert grades == list(range(a, b + 1)), "grade window is not contiguous"
    assert -radius < a and b < radius, "grade window touches the scan bound"
    return HomWindow(a, b)


def hom_dim(K: KupischSeries, x: Label, y: Label) -> int:
    w = hom_window(K, x, y)
    return 0 if w is None else w.dim


@dataclass(frozen=True)
class BasisMorphism:
    """The basis morphism of grade ``grade`` from M(src) to M(dst).

    Validity (the grade lying in the hom window) depends on the series and
    is not enforced here; see :func:`basis_morphism_valid`.
    """

    src: Label
    dst: Label
    grade: int


def basis_morphism_valid(K: KupischSeries, m: BasisMorphism) -> bool:
    w = hom_window(K, m.src, m.dst)
    return w is not None and w.a <= m.grade <= w.b


def identity_morphism(x: Label) -> BasisMorphism:
    return BasisMorphism(x, x, 0)


def compose_basis(
    K: KupischSeries, g: BasisMorphism, f: BasisMorphism
) -> BasisMorphism | None:
    """g after f; grades add, and the composite is zero (None) unless
    f.src interleaves the shifted g.dst."""
    if g.src != f.dst:
        raise Mismatch(f"cannot compose {g} after {f}")
    grade = f.grade + g.grade
    if interleaves(f.src, sigma_shift(g.dst, grade, K.n)):
        return BasisMorphism(f.src, g.dst, grade)
    return None


def interval_points(x: Label):
    """The box of integer tuples z with x_i <= z_i <= x_{i+1} - 1."""
    return product(*(range(x[i], x[i + 1]) for i in range(len(x) - 1)))


def module_dimension(K: KupischSeries, x: Label) -> int:
    """Total dimension of M(x): the box volume."""
    require_ct_label(K, x)
    return prod(b - a for a, b in zip(x, x[1:]))


def dimension_vector(K: KupischSeries, x: Label) -> dict[Label, int]:
    """Multiplicity of each canonical vertex among the box points of x."""
    require_ct_label(K, x)
    dims = {v: 0 for v in enumerate_vertices(K)}
    for z in interval_points(x):
        dims[canonicalize(z, K.n)] += 1
    return dims


@dataclass(frozen=True)
class Quiver:
    """A finite quiver on canonical labels; arrows add 1 to one coordinate."""

    vertices: tuple[Label, ...]
    arrows: tuple[tuple[Label, int, Label], ...]


@lru_cache(maxsize=None)
def gabriel_quiver(K: KupischSeries) -> Quiver:
    """Vertices of arity d with arrows x -> x + e_i, canonically folded."""
    return _successor_quiver(K, enumerate_vertices(K), "vertex")


@lru_cache(maxsize=None)
def ct_quiver(K: KupischSeries) -> Quiver:
    """The quiver on cluster-tilting labels with the same arrow rule."""
    return _successor_quiver(K, enumerate_ct_labels(K), "ct")


def _successor_quiver(K: KupischSeries, vertices, kind: str) -> Quiver:
    vertices = tuple(sorted(vertices))
    if all(v == 1 for v in K.ell):
        # semisimple series: the radical vanishes, so there are no arrows
        return Quiver(vertices, ())
    vset = set(vertices)
    arrows = []
    for x in vertices:
        for i in range(len(x)):
            if i + 1 < len(x) and x[i] + 1 == x[i + 1]:
                continue  # bump would collide with the next coordinate
            y = x[:i] + (x[i] + 1,) + x[i + 1 :]
            if length_bound_holds(K, y, kind):
                dst = canonicalize(y, K.n)
                assert dst in vset
                arrows.append((x, i + 1, dst))
    return Quiver(vertices, tuple(sorted(arrows)))
