"""Resolution quiver, derived series, and the singularity presentation.

Pipeline for an algebra with series (d; ell_1..ell_n):

1. the resolution quiver i -> f_bar(i) on {1..n}, with cycle set J and the
   periodic index set I = J + n*Z;
2. the derived pair (n', ell'): n' = |J| and ell' counts I-points in the
   interval [f(iota(k)), iota(k)] minus d, constant in k;
3. when ell' >= 2, the self-injective algebra B with series (d; ell'^n')
   presents the singular part, and Lambda with series (d+1; (ell'-1)^n')
   is its stable cluster-tilting endomorphism algebra;
4. labels with all coordinates in I form the wide subcategory; iota
   transports them bijectively to the cluster-tilting labels of B.

When ell' <= 1 the singular part vanishes and steps 3-4 report nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import (
    KupischSeries,
    Label,
    canonicalize,
    cycle_vertices,
    enumerate_ct_labels,
    enumerate_vertices,
    f_bar,
    f_map,
    length_bound_holds,
    validate_kupisch,
)
from .ct import Quiver, ct_quiver, require_ct_label
from .errors import (
    NonConstantDerivedKupisch,
    NotInI,
    NotInWide,
    NotVertex,
    TrivialSingularity,
)


@dataclass(frozen=True)
class ResolutionQuiver:
    """Functional graph on {1..n}: one edge i -> f_bar(i) per vertex."""

    n: int
    edges: tuple[int, ...]  # edges[i - 1] = f_bar(i)
    J: tuple[int, ...]  # sorted vertices lying on cycles

    def edge(self, i: int) -> int:
        return self.edges[i - 1]


@lru_cache(maxsize=None)
def resolution_quiver(K: KupischSeries) -> ResolutionQuiver:
    edges = tuple(f_bar(K, i) for i in range(1, K.n + 1))
    return ResolutionQuiver(K.n, edges, cycle_vertices(K))


def in_index_set(K: KupischSeries, i: int) -> bool:
    """Whether i belongs to I = J + n*Z."""
    return (i - 1) % K.n + 1 in cycle_vertices(K)


def iota_map(K: KupischSeries, k: int) -> int:
    """The order-preserving bijection Z -> I with iota(1) = min J."""
    J = cycle_vertices(K)
    n_prime = len(J)
    q, r = divmod(k - 1, n_prime)
    return J[r] + q * K.n


def iota_inverse(K: KupischSeries, i: int) -> int:
    if not in_index_set(K, i):
        raise NotInI(f"{i} is not in the index set I")
    J = cycle_vertices(K)
    j = (i - 1) % K.n + 1
    q = (i - j) // K.n
    return J.index(j) + 1 + q * len(J)


@dataclass(frozen=True)
class DerivedKupisch:
    n_prime: int
    ell_prime: int
    trivial: bool  # ell_prime <= 1: the singularity category vanishes


def derived_kupisch(K: KupischSeries) -> DerivedKupisch:
    """Compute ell'_k for every k in 1..n' and assert it is constant."""
    J = cycle_vertices(K)
    n_prime = len(J)
    values = []
    for k in range(1, n_prime + 1):
        top = iota_map(K, k)
        bottom = f_map(K, top)
        count = sum(1 for m in range(bottom, top + 1) if in_index_set(K, m))
        values.append(count - K.d)
    if len(set(values)) != 1:
        raise NonConstantDerivedKupisch(f"derived series {values} is not constant")
    ell_prime = values[0]
    return DerivedKupisch(n_prime, ell_prime, ell_prime <= 1)


@dataclass(frozen=True)
class AlgebraSpec:
    """A named algebra given by its series; semisimple (ell = 1) allowed.

    validate_kupisch rejects series with entries <= 1, but the constant-1
    series is needed to describe a semisimple stable endomorphism algebra,
    so it is admitted here and flagged instead.
    """

    d: int
    ell: tuple[int, ...]
    tag: str = ""

    @property
    def n(self) -> int:
        return len(self.ell)

    @property
    def semisimple(self) -> bool:
        return all(v == 1 for v in self.ell)

    def series(self) -> KupischSeries:
        if self.semisimple:
            return KupischSeries(self.d, self.ell)
        return validate_kupisch(self.d, self.ell)


def make_algebra_spec(d: int, ell, tag: str = "") -> AlgebraSpec:
    values = tuple(int(v) for v in ell)
    if not all(v == 1 for v in values):
        validate_kupisch(d, values)
    return AlgebraSpec(d, values, tag)


@lru_cache(maxsize=None)
def wide_labels(K: KupischSeries) -> tuple[Label, ...]:
    """Cluster-tilting labels all of whose coordinates lie in I."""
    return tuple(
        x for x in enumerate_ct_labels(K) if all(in_index_set(K, c) for c in x)
    )


def b_spec(K: KupischSeries) -> AlgebraSpec:
    derived = derived_kupisch(K)
    if derived.trivial:
        raise TrivialSingularity(
            f"ell' = {derived.ell_prime} <= 1, the singular part is zero"
        )
    return AlgebraSpec(K.d, (derived.ell_prime,) * derived.n_prime, tag="B")


def lambda_spec(K: KupischSeries) -> AlgebraSpec:
    derived = derived_kupisch(K)
    if derived.trivial:
        raise TrivialSingularity(
            f"ell' = {derived.ell_prime} <= 1, the singular part is zero"
        )
    return AlgebraSpec(
        K.d + 1, (derived.ell_prime - 1,) * derived.n_prime, tag="Lambda"
    )


def label_to_b(K: KupischSeries, x: Label) -> Label:
    """Coordinate-wise iota-inverse, canonicalized over the period n'."""
    if not all(in_index_set(K, c) for c in x):
        raise NotInWide(f"{x} has a coordinate outside I")
    spec = b_spec(K)
    u = canonicalize(tuple(iota_inverse(K, c) for c in x), spec.n)
    assert length_bound_holds(spec.series(), u, "ct")
    return u


def label_from_b(K: KupischSeries, u: Label) -> Label:
    """Coordinate-wise iota, canonicalized over the period n."""
    spec = b_spec(K)
    require_ct_label(spec.series(), u)
    return canonicalize(tuple(iota_map(K, c) for c in u), K.n)


def wide_quiver(K: KupischSeries) -> Quiver:
    """The quiver of the wide subcategory: B's cluster-tilting quiver with
    every label pushed through iota."""
    spec = b_spec(K)
    base = ct_quiver(spec.series())
    vertices = tuple(sorted(label_from_b(K, u) for u in base.vertices))
    arrows = tuple(
        sorted(
            (label_from_b(K, u), i, label_from_b(K, w)) for (u, i, w) in base.arrows
        )
    )
    return Quiver(vertices, arrows)


def _constant_ell(spec: AlgebraSpec) -> int:
    if len(set(spec.ell)) != 1:
        raise ValueError(f"{spec.tag or spec}: quiver twist needs a constant series")
    return spec.ell[0]


def phi(spec: AlgebraSpec, v: Label) -> Label:
    """Quiver automorphism (x_1..x_m) -> (f(x_m), x_1, .., x_{m-1}).

    Defined on the Gabriel-quiver vertices of a self-injective algebra;
    f(i) = i - ell - d + 1 in the algebra's own parameters.
    """
    series = spec.series()
    if v not in set(enumerate_vertices(series)):
        raise NotVertex(f"{v} is not a vertex of {spec.tag or 'the algebra'}")
    shift = _constant_ell(spec) + spec.d - 1
    return canonicalize((v[-1] - shift, *v[:-1]), spec.n)


def phi_inverse(spec: AlgebraSpec, v: Label) -> Label:
    series = spec.series()
    if v not in set(enumerate_vertices(series)):
        raise NotVertex(f"{v} is not a vertex of {spec.tag or 'the algebra'}")
    shift = _constant_ell(spec) + spec.d - 1
    return canonicalize((*v[1:], v[0] + shift), spec.n)


@dataclass(frozen=True)
class SingularityReport:
    """Everything the pipeline produces for one input algebra."""

    algebra: AlgebraSpec
    resolution: ResolutionQuiver
    n_prime: int
    ell_prime: int
    trivial: bool
    b: AlgebraSpec | None
    lam: AlgebraSpec | None
    wide: tuple[Label, ...]
    dictionary: tuple[tuple[Label, Label], ...] | None  # wide label -> B label


def analyze(K: KupischSeries) -> SingularityReport:
    derived = derived_kupisch(K)
    wide = wide_labels(K)
    if derived.trivial:
        return SingularityReport(
            algebra=AlgebraSpec(K.d, K.ell, tag="A"),
            resolution=resolution_quiver(K),
            n_prime=derived.n_prime,
            ell_prime=derived.ell_prime,
            trivial=True,
            b=None,
            lam=None,
            wide=wide,
            dictionary=None,
        )
    b = b_spec(K)
    dictionary = tuple((x, label_to_b(K, x)) for x in wide)
    assert len({u for _, u in dictionary}) == len(dictionary)
    assert set(u for _, u in dictionary) == set(enumerate_ct_labels(b.series()))
    return SingularityReport(
        algebra=AlgebraSpec(K.d, K.ell, tag="A"),
        resolution=resolution_quiver(K),
        n_prime=derived.n_prime,
        ell_prime=derived.ell_prime,
        trivial=False,
        b=b,
        lam=lambda_spec(K),
        wide=wide,
        dictionary=dictionary,
    )
