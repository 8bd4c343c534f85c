"""Verification engine over bound quiver representations mod p.

Everything here is independent of the label formulas elsewhere in the
package: modules are matrices, hom spaces are solution spaces of the
commutation equations, covers are built from tops, and syzygies are honest
kernels.  The rest of the package predicts; this module checks.

Conventions.  Representations are right modules: for a quiver arrow
u -> u + e_i the stored matrix ``act[arrow]`` has shape
(dims[src], dims[dst]) and is the action map from the space at the target
into the space at the source.  Serial-module pictures then come out with
the top at the largest label, matching the combinatorial predicates.  A
morphism phi: M -> N is a family phi_v with
phi_src @ M.act[a] = N.act[a] @ phi_dst for every arrow a.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .combinatorics import KupischSeries, Label, canonicalize
from .ct import (
    Quiver,
    gabriel_quiver,
    interval_points,
    projective_label_with_top,
    require_ct_label,
)
from .errors import (
    BadPrime,
    CoverNotSurjective,
    PeriodicityFailed,
    SemisimpleLambda,
)
from .singularity import AlgebraSpec, phi, phi_inverse

Arrow = tuple[Label, int, Label]


# ---------------------------------------------------------------------------
# dense exact linear algebra over F_p


def _as_mod_array(a, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def row_reduce(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (matrix, pivot columns)."""
    m = _as_mod_array(a, p).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(m[r:, c])[0]
        if nonzero.size == 0:
            continue
        i = r + int(nonzero[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        col = m[:, c].copy()
        col[r] = 0
        m = (m - np.outer(col, m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank_mod(a, p: int) -> int:
    a = _as_mod_array(a, p)
    if 0 in a.shape:
        return 0
    return len(row_reduce(a, p)[1])


def nullspace_mod(a, p: int) -> np.ndarray:
    """Columns form an echelon basis of the right kernel of a mod p."""
    a = _as_mod_array(a, p)
    rows, cols = a.shape
    if rows == 0 or cols == 0:
        return np.eye(cols, dtype=np.int64)
    reduced, pivots = row_reduce(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for r, pc in enumerate(pivots):
            basis[pc, k] = (-reduced[r, fc]) % p
    return basis


def solve_mod(a, b, p: int) -> np.ndarray:
    """Solve a @ x = b for a with full column rank; raises on failure."""
    a = _as_mod_array(a, p)
    b = _as_mod_array(b, p)
    rows, cols = a.shape
    if cols == 0:
        if np.any(b % p):
            raise np.linalg.LinAlgError("inconsistent system")
        return np.zeros((0, b.shape[1]), dtype=np.int64)
    reduced, pivots = row_reduce(np.hstack([a, b]), p)
    if len(pivots) != len([c for c in pivots if c < cols]) or len(pivots) != cols:
        raise np.linalg.LinAlgError("matrix does not have full column rank")
    x = np.zeros((cols, b.shape[1]), dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = reduced[r, cols:]
    # rows below the pivots must have vanished
    if np.any(reduced[len(pivots) :, cols:] % p):
        raise np.linalg.LinAlgError("inconsistent system")
    return x


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    q = 3
    while q * q <= p:
        if p % q == 0:
            return False
        q += 2
    return True


# ---------------------------------------------------------------------------
# the algebra and its representations


@dataclass(frozen=True)
class Relation:
    """A commutativity pair of two-step paths, or a single path to kill.

    Paths are (first arrow, second arrow) in traversal order; ``right`` is
    None for zero relations.
    """

    kind: str  # "commute" | "zero"
    left: tuple[Arrow, Arrow]
    right: tuple[Arrow, Arrow] | None


class BoundQuiverAlgebra:
    """Gabriel quiver plus the full commutativity/zero relation set."""

    def __init__(self, spec: AlgebraSpec, prime: int):
        if not is_prime(prime):
            raise BadPrime(f"{prime} is not prime")
        self.spec = spec
        self.prime = prime
        self.series: KupischSeries = spec.series()
        quiver: Quiver = gabriel_quiver(self.series)
        self.vertices: tuple[Label, ...] = quiver.vertices
        self.arrows: tuple[Arrow, ...] = quiver.arrows
        self.vertex_set = frozenset(self.vertices)
        self._arrow_at: dict[tuple[Label, int], Arrow] = {
            (a[0], a[1]): a for a in self.arrows
        }
        self.arrows_by_src: dict[Label, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            self.arrows_by_src[a[0]].append(a)
        self.relations: tuple[Relation, ...] = self._build_relations()
        self._projective_cache: dict[Label, Representation] = {}

    def arrow_at(self, src: Label, i: int) -> Arrow | None:
        return self._arrow_at.get((src, i))

    def _two_step(self, x: Label, first: int, second: int):
        a1 = self.arrow_at(x, first)
        if a1 is None:
            return None
        a2 = self.arrow_at(a1[2], second)
        if a2 is None:
            return None
        return (a1, a2)

    def _build_relations(self) -> tuple[Relation, ...]:
        relations = []
        d = self.series.d
        for x in self.vertices:
            for i in range(1, d + 1):
                for j in range(i + 1, d + 1):
                    via_j = self._two_step(x, j, i)
                    via_i = self._two_step(x, i, j)
                    if via_j is not None and via_i is not None:
                        assert via_j[1][2] == via_i[1][2]
                        relations.append(Relation("commute", via_j, via_i))
                    elif via_j is not None:
                        relations.append(Relation("zero", via_j, None))
                    elif via_i is not None:
                        relations.append(Relation("zero", via_i, None))
        return tuple(relations)


def build_algebra(spec: AlgebraSpec | KupischSeries, prime: int) -> BoundQuiverAlgebra:
    if isinstance(spec, KupischSeries):
        spec = AlgebraSpec(spec.d, spec.ell)
    return BoundQuiverAlgebra(spec, prime)


class Representation:
    """dims per vertex plus one action matrix per arrow (see module doc)."""

    def __init__(self, alg: BoundQuiverAlgebra, dims, act, basis=None):
        self.alg = alg
        self.dims = {v: int(dims.get(v, 0)) for v in alg.vertices}
        self.act = {}
        for a in alg.arrows:
            u, _, w = a
            mat = act.get(a)
            if mat is None:
                mat = np.zeros((self.dims[u], self.dims[w]), dtype=np.int64)
            mat = _as_mod_array(mat, alg.prime)
            assert mat.shape == (self.dims[u], self.dims[w])
            self.act[a] = mat
        self.basis = basis  # translate basis per vertex, realized modules only

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> dict[Label, int]:
        return dict(self.dims)

    def path_action(self, path) -> np.ndarray:
        """Action of a two-step path: a matrix into the space at its start."""
        (a1, a2) = path
        return (self.act[a1] @ self.act[a2]) % self.alg.prime


def assert_relations(rep: Representation) -> None:
    p = rep.alg.prime
    for rel in rep.alg.relations:
        left = rep.path_action(rel.left)
        if rel.kind == "zero":
            if np.any(left % p):
                raise AssertionError(f"zero relation violated at {rel.left}")
        else:
            right = rep.path_action(rel.right)
            if np.any((left - right) % p):
                raise AssertionError(f"commutativity violated at {rel.left}")


def realize(alg: BoundQuiverAlgebra, x: Label) -> Representation:
    """The representation of M(x): one basis vector per box point."""
    K = alg.series
    require_ct_label(K, x)
    points = list(interval_points(x))
    point_set = set(points)
    basis: dict[Label, list[Label]] = {v: [] for v in alg.vertices}
    for z in points:
        basis[canonicalize(z, K.n)].append(z)
    for v in basis:
        basis[v].sort()
    position = {z: r for v in alg.vertices for r, z in enumerate(basis[v])}
    dims = {v: len(basis[v]) for v in alg.vertices}
    act = {}
    for a in alg.arrows:
        u, i, w = a
        mat = np.zeros((dims[u], dims[w]), dtype=np.int64)
        for col, z in enumerate(basis[w]):
            below = z[: i - 1] + (z[i - 1] - 1,) + z[i:]
            if below in point_set:
                assert canonicalize(below, K.n) == u
                mat[position[below], col] = 1
        act[a] = mat
    rep = Representation(alg, dims, act, basis={v: tuple(basis[v]) for v in basis})
    assert_relations(rep)
    return rep


def simple_rep(alg: BoundQuiverAlgebra, v: Label) -> Representation:
    if v not in alg.vertex_set:
        raise KeyError(f"{v} is not a vertex")
    return Representation(alg, {v: 1}, {})


# ---------------------------------------------------------------------------
# hom spaces


def _hom_system(alg, M: Representation, N: Representation):
    """Coefficient matrix of the commutation equations, plus var layout."""
    offsets = {}
    total = 0
    for v in alg.vertices:
        offsets[v] = total
        total += N.dims[v] * M.dims[v]
    rows = []
    for a in alg.arrows:
        u, _, w = a
        n_u, m_w = N.dims[u], M.dims[w]
        if n_u * m_w == 0:
            continue
        block = np.zeros((n_u * m_w, total), dtype=np.int64)
        if N.dims[u] * M.dims[u]:
            # vec(phi_u @ B) = (I kron B^T) vec(phi_u), row-major vec
            block[:, offsets[u] : offsets[u] + N.dims[u] * M.dims[u]] = np.kron(
                np.eye(n_u, dtype=np.int64), M.act[a].T
            )
        if N.dims[w] * M.dims[w]:
            block[:, offsets[w] : offsets[w] + N.dims[w] * M.dims[w]] -= np.kron(
                N.act[a], np.eye(m_w, dtype=np.int64)
            )
        rows.append(block % alg.prime)
    system = (
        np.vstack(rows) if rows else np.zeros((0, total), dtype=np.int64)
    )
    return system, offsets, total


def hom_space_dim(alg, M: Representation, N: Representation) -> int:
    system, _, total = _hom_system(alg, M, N)
    if total == 0:
        return 0
    return total - rank_mod(system, alg.prime)


def hom_space_basis(alg, M: Representation, N: Representation):
    """Basis of Hom(M, N) as per-vertex matrix families."""
    system, offsets, total = _hom_system(alg, M, N)
    if total == 0:
        return []
    kernel = nullspace_mod(system, alg.prime)
    out = []
    for k in range(kernel.shape[1]):
        vec = kernel[:, k]
        phi_maps = {}
        for v in alg.vertices:
            size = N.dims[v] * M.dims[v]
            phi_maps[v] = vec[offsets[v] : offsets[v] + size].reshape(
                N.dims[v], M.dims[v]
            )
        out.append(phi_maps)
    return out


# ---------------------------------------------------------------------------
# projective covers and syzygies


@dataclass
class Cover:
    """A projective cover pi: module -> target, with its summand labels."""

    module: Representation
    maps: dict[Label, np.ndarray]  # per vertex, shape (dims_target, dims_module)
    summands: tuple[Label, ...]


def top_multiplicities(alg, M: Representation) -> dict[Label, int]:
    """Multiplicity of each simple in M / rad M."""
    p = alg.prime
    out = {}
    for v in alg.vertices:
        if M.dims[v] == 0:
            out[v] = 0
            continue
        images = [M.act[a] for a in alg.arrows_by_src[v] if M.act[a].shape[1]]
        stacked = (
            np.hstack(images) if images else np.zeros((M.dims[v], 0), dtype=np.int64)
        )
        out[v] = M.dims[v] - rank_mod(stacked, p)
    return out


def _projective_at(alg, v: Label) -> Representation:
    label = projective_label_with_top(alg.series, v)
    cached = alg._projective_cache.get(label)
    if cached is None:
        cached = alg._projective_cache[label] = realize(alg, label)
    return cached


def _hom_from_projective(alg, proj: Representation, M: Representation, seed):
    """The morphism proj -> M sending the top generator to ``seed``.

    The generator sits at the largest box point; every other basis vector
    is a path image of it, so the morphism propagates downward through the
    arrow actions.  Route independence follows from the relations and is
    asserted.
    """
    p = alg.prime
    K = alg.series
    assert proj.basis is not None
    box = [z for v in alg.vertices for z in proj.basis[v]]
    box_set = set(box)
    top = max(box, key=sum)
    values = {top: _as_mod_array(seed, p)}
    for z in sorted(box, key=sum, reverse=True):
        if z == top:
            continue
        for i in range(1, len(z) + 1):
            above = z[: i - 1] + (z[i - 1] + 1,) + z[i:]
            if above not in box_set:
                continue
            arrow = alg.arrow_at(canonicalize(z, K.n), i)
            assert arrow is not None
            candidate = (M.act[arrow] @ values[above]) % p
            if z in values:
                assert np.array_equal(values[z], candidate)
            else:
                values[z] = candidate
        assert z in values
    maps = {}
    for v in alg.vertices:
        mat = np.zeros((M.dims[v], proj.dims[v]), dtype=np.int64)
        for col, z in enumerate(proj.basis[v]):
            mat[:, col] = values[z]
        maps[v] = mat
    return maps


def projective_cover(alg, M: Representation) -> Cover:
    p = alg.prime
    pieces = []  # (summand label, proj rep, hom into M)
    for v in alg.vertices:
        if M.dims[v] == 0:
            continue
        images = [M.act[a] for a in alg.arrows_by_src[v] if M.act[a].shape[1]]
        radical = (
            np.hstack(images) if images else np.zeros((M.dims[v], 0), dtype=np.int64)
        )
        width = radical.shape[1]
        _, pivots = row_reduce(
            np.hstack([radical, np.eye(M.dims[v], dtype=np.int64)]), p
        )
        complement = [c - width for c in pivots if c >= width]
        if not complement:
            continue
        proj = _projective_at(alg, v)
        for idx in complement:
            seed = np.zeros(M.dims[v], dtype=np.int64)
            seed[idx] = 1
            pieces.append(
                (
                    projective_label_with_top(alg.series, v),
                    proj,
                    _hom_from_projective(alg, proj, M, seed),
                )
            )
    dims = {v: sum(proj.dims[v] for _, proj, _ in pieces) for v in alg.vertices}
    act = {}
    for a in alg.arrows:
        u, _, w = a
        mat = np.zeros((dims[u], dims[w]), dtype=np.int64)
        ro = co = 0
        for _, proj, _ in pieces:
            block = proj.act[a]
            mat[ro : ro + block.shape[0], co : co + block.shape[1]] = block
            ro += block.shape[0]
            co += block.shape[1]
        act[a] = mat
    module = Representation(alg, dims, act)
    maps = {}
    for v in alg.vertices:
        blocks = [hom[v] for _, _, hom in pieces]
        maps[v] = (
            np.hstack(blocks)
            if blocks
            else np.zeros((M.dims[v], 0), dtype=np.int64)
        )
    for a in alg.arrows:  # naturality of the assembled cover
        u, _, w = a
        assert not np.any((maps[u] @ module.act[a] - M.act[a] @ maps[w]) % p)
    for v in alg.vertices:
        if rank_mod(maps[v], p) != M.dims[v]:
            raise CoverNotSurjective(f"cover misses part of the space at {v}")
    return Cover(module, maps, tuple(label for label, _, _ in pieces))


def syzygy_rep(alg, M: Representation, cover: Cover | None = None) -> Representation:
    """Kernel of the projective cover, with its induced arrow actions."""
    p = alg.prime
    cov = cover if cover is not None else projective_cover(alg, M)
    P = cov.module
    kernel_basis = {v: nullspace_mod(cov.maps[v], p) for v in alg.vertices}
    dims = {v: kernel_basis[v].shape[1] for v in alg.vertices}
    act = {}
    for a in alg.arrows:
        u, _, w = a
        carried = (P.act[a] @ kernel_basis[w]) % p
        act[a] = solve_mod(kernel_basis[u], carried, p)
    rep = Representation(alg, dims, act)
    assert_relations(rep)
    return rep


def stable_hom_dim(alg, M, N, cover: Cover | None = None) -> int:
    """dim Hom(M, N) minus the dimension of maps factoring through projectives."""
    p = alg.prime
    total = hom_space_dim(alg, M, N)
    if total == 0:
        return 0
    cov = cover if cover is not None else projective_cover(alg, N)
    through = hom_space_basis(alg, M, cov.module)
    if not through:
        return total
    rows = [
        np.concatenate([(cov.maps[v] @ h[v]).ravel() % p for v in alg.vertices])
        for h in through
    ]
    return total - rank_mod(np.vstack(rows), p)


# ---------------------------------------------------------------------------
# twisted periodicity of the stable endomorphism algebra


@dataclass
class PeriodicityReport:
    exponent: int
    direction: str  # "phi", "phi-inverse", or "both"
    assignments: tuple[tuple[Label, Label], ...]  # vertex -> where its syzygy landed


def _is_simple_at(alg, R: Representation, w: Label) -> bool:
    if R.total_dim != 1 or R.dims[w] != 1:
        return False
    S = simple_rep(alg, w)
    return (
        hom_space_dim(alg, R, S) >= 1
        and hom_space_dim(alg, S, R) >= 1
        and hom_space_dim(alg, R, R) == 1
    )


def check_twisted_periodicity(spec: AlgebraSpec, prime: int) -> PeriodicityReport:
    """Verify that the (d+1)-fold syzygy of every simple is the simple at a
    uniform twist image of its vertex; the direction is discovered, not
    prescribed."""
    if spec.semisimple:
        raise SemisimpleLambda(f"{spec.tag or spec} is semisimple")
    alg = build_algebra(spec, prime)
    exponent = spec.d + 1
    forward = []
    backward = []
    assignments = []
    for v in alg.vertices:
        R = simple_rep(alg, v)
        for _ in range(exponent):
            R = syzygy_rep(alg, R)
        hits = [w for w in alg.vertices if R.dims[w] == 1]
        if R.total_dim != 1 or len(hits) != 1:
            raise PeriodicityFailed(f"syzygy of the simple at {v} is not simple")
        assignments.append((v, hits[0]))
        forward.append(_is_simple_at(alg, R, phi(spec, v)))
        backward.append(_is_simple_at(alg, R, phi_inverse(spec, v)))
    if all(forward) and all(backward):
        direction = "both"
    elif all(forward):
        direction = "phi"
    elif all(backward):
        direction = "phi-inverse"
    else:
        raise PeriodicityFailed("no uniform twist direction matched every simple")
    return PeriodicityReport(exponent, direction, tuple(assignments))
