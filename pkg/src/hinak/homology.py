"""Syzygy combinatorics on cluster-tilting labels.

One d-fold syzygy step rotates a label: a non-projective x has
Omega^d M(x) = M(f(x_{d+1}), x_1, ..., x_d), sitting in an exact sequence
whose i-th projective term drops x_i instead of x_{d+1}.  Iterating d+1
steps applies f to every coordinate, which motivates extending f to labels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .combinatorics import (
    KupischSeries,
    Label,
    canonicalize,
    cycle_vertices,
    f_bar,
    f_map,
    length_bound_holds,
)
from .ct import is_projective, require_ct_label


@dataclass(frozen=True)
class SyzygyStep:
    """One application of Omega^d: resolution terms and the kernel label.

    ``terms`` lists the projectives P_1..P_d of the exact sequence
    0 -> kernel -> P_d -> ... -> P_1 -> M(source) -> 0; both are empty/None
    when the source is projective.
    """

    source: Label
    terms: tuple[Label, ...]
    kernel: Label | None


def d_syzygy_step(K: KupischSeries, x: Label) -> SyzygyStep:
    require_ct_label(K, x)
    if is_projective(K, x):
        return SyzygyStep(x, (), None)
    head = f_map(K, x[-1])
    terms = tuple(
        canonicalize((head,) + x[:i] + x[i + 1 : -1] + (x[-1],), K.n)
        for i in range(K.d)
    )
    kernel = canonicalize((head,) + x[:-1], K.n)
    assert all(is_projective(K, t) for t in terms)
    return SyzygyStep(x, terms, kernel)


def extended_f(K: KupischSeries, x: Label | None) -> Label | None:
    """Coordinate-wise f on labels, or None (zero) when it degenerates.

    The image is kept only when it is strictly increasing and lies fully
    below x_1; None propagates through iteration.
    """
    if x is None:
        return None
    require_ct_label(K, x)
    image = tuple(f_map(K, c) for c in x)
    increasing = all(a < b for a, b in zip(image, image[1:]))
    if not (increasing and image[-1] < x[0]):
        return None
    out = canonicalize(image, K.n)
    assert length_bound_holds(K, out, "ct")
    return out


@dataclass(frozen=True)
class FinitePd:
    """Syzygy steps taken until a projective appeared (0 for projectives)."""

    steps: int


@dataclass(frozen=True)
class InfinitePd:
    """Length of the canonical-label cycle traversed by the syzygy steps."""

    period: int


def proj_dim_class(K: KupischSeries, x: Label) -> FinitePd | InfinitePd:
    """Iterate d-fold syzygies until a projective or a repeated label."""
    seen: dict[Label, int] = {}
    cur = x
    step = 0
    while True:
        if is_projective(K, cur):
            return FinitePd(step)
        if cur in seen:
            return InfinitePd(step - seen[cur])
        seen[cur] = step
        cur = d_syzygy_step(K, cur).kernel
        step += 1


def stable_shift_witness(K: KupischSeries) -> tuple[int, int]:
    """Minimal s >= 1 with f^s(j) = j + t*n for every cycle vertex j.

    Returns (s, t) with t signed; f decreases, so t < 0.  Such an s exists
    because f restricted to the cycle classes is a finite-order bijection,
    and the common shift is forced once the class permutation closes up.
    """
    J = cycle_vertices(K)
    perm = {j: f_bar(K, j) for j in J}
    cap = math.lcm(*(_cycle_length(perm, j) for j in J))
    vals = {j: j for j in J}
    for s in range(1, cap + 1):
        vals = {j: f_map(K, v) for j, v in vals.items()}
        shifts = {vals[j] - j for j in J}
        if len(shifts) == 1:
            shift = shifts.pop()
            if shift % K.n == 0:
                return s, shift // K.n
    raise RuntimeError("no uniform shift up to the permutation order; bug")


def _cycle_length(perm: dict[int, int], start: int) -> int:
    length = 1
    j = perm[start]
    while j != start:
        j = perm[j]
        length += 1
    return length
