"""Kupisch-series combinatorics: labels, the map f, and enumerations.

Conventions used throughout the package:

* A Kupisch series is a cyclic list (ell_1, ..., ell_n) satisfying
  1 <= ell_i <= ell_{i-1} + 1 at every index including the wrap, with
  ell_i >= 2 (connectedness).  Indices are read modulo n, so ``ell_at(i)``
  makes sense for every integer i.
* Labels are strictly increasing integer tuples.  Arity d+1 tuples name
  indecomposable cluster-tilting modules M(x) and are bounded by
  x_{d+1} - x_1 + 1 <= ell_{x_{d+1}} + d.  Arity d tuples name quiver
  vertices and are bounded against the shifted series ell[1]_i = ell_{i+1}.
* sigma shifts all coordinates down by the period: sigma^i(x) = x - i*n.
  M(x) and M(sigma(x)) are the same module; the canonical representative
  of an orbit has first coordinate in {1, ..., n}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import (
    BadArity,
    Disconnected,
    NonPeriodicKupisch,
    NotIncreasing,
    OutOfRange,
)

Label = tuple[int, ...]


@dataclass(frozen=True)
class KupischSeries:
    """Cyclic Loewy-length data (d; ell_1..ell_n).

    Instances are plain records; use :func:`validate_kupisch` to construct
    one with the series inequalities checked.
    """

    d: int
    ell: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.ell)

    def ell_at(self, i: int) -> int:
        """ell_i, index read cyclically (1-based)."""
        return self.ell[(i - 1) % self.n]

    def shifted_ell_at(self, i: int) -> int:
        """ell[1]_i = ell_{i+1}, the series governing quiver vertices."""
        return self.ell_at(i + 1)


def validate_kupisch(d: int, ell) -> KupischSeries:
    """Check (d, ell) and return the validated series.

    Raises BadArity for d < 1 or an empty list, NonPeriodicKupisch when the
    cyclic inequalities fail (wrap included), Disconnected when some
    ell_i <= 1.
    """
    if d < 1:
        raise BadArity(f"d must be >= 1, got {d}")
    values = tuple(int(v) for v in ell)
    if not values:
        raise BadArity("Kupisch series must be nonempty")
    n = len(values)
    for i in range(n):
        prev = values[i - 1]  # i == 0 wraps to ell_n
        if not 1 <= values[i] <= prev + 1:
            raise NonPeriodicKupisch(
                f"ell_{i + 1} = {values[i]} violates 1 <= ell_i <= ell_(i-1) + 1 "
                f"(previous value {prev})"
            )
    if any(v < 2 for v in values):
        raise Disconnected(f"series {values} has an entry <= 1")
    return KupischSeries(d, values)


def f_map(K: KupischSeries, i: int) -> int:
    """f(i) = i - ell_i - d + 1, defined for every integer i."""
    return i - K.ell_at(i) - K.d + 1


def f_bar(K: KupischSeries, i: int) -> int:
    """The representative of f(i) mod n inside {1, ..., n}."""
    if not 1 <= i <= K.n:
        raise OutOfRange(f"vertex {i} outside 1..{K.n}")
    return (f_map(K, i) - 1) % K.n + 1


def length_bound_holds(K: KupischSeries, x: Label, kind: str) -> bool:
    """The span bound for membership in the ordered-sequence set of ``kind``.

    kind "ct": x_m - x_1 + 1 <= ell_{x_m} + d    (m = d + 1)
    kind "vertex": x_m - x_1 + 1 <= ell[1]_{x_m} + d - 1    (m = d)
    """
    last = x[-1]
    if kind == "ct":
        bound = K.ell_at(last) + K.d
    elif kind == "vertex":
        bound = K.shifted_ell_at(last) + K.d - 1
    else:
        raise ValueError(f"kind must be 'ct' or 'vertex', got {kind!r}")
    return last - x[0] + 1 <= bound


def is_ordered_sequence(K: KupischSeries, x: Label, kind: str = "ct") -> bool:
    """Membership of x in the ordered-sequence set naming modules or vertices."""
    arity = K.d + 1 if kind == "ct" else K.d
    if kind not in ("ct", "vertex"):
        raise ValueError(f"kind must be 'ct' or 'vertex', got {kind!r}")
    if len(x) != arity:
        raise BadArity(f"expected arity {arity} for kind {kind!r}, got {len(x)}")
    if any(a >= b for a, b in zip(x, x[1:])):
        raise NotIncreasing(f"{x} is not strictly increasing")
    return length_bound_holds(K, x, kind)


def interleaves(x: Label, y: Label) -> bool:
    """x interleaves y: x_1 <= y_1 < x_2 <= y_2 < ... < x_m <= y_m."""
    if len(x) != len(y):
        raise BadArity(f"arity mismatch: {len(x)} vs {len(y)}")
    m = len(x)
    for j in range(m):
        if x[j] > y[j]:
            return False
        if j + 1 < m and y[j] >= x[j + 1]:
            return False
    return True


def sigma_shift(x: Label, i: int, n: int) -> Label:
    """sigma^i(x): subtract i*n from every coordinate."""
    return tuple(c - i * n for c in x)


def canonicalize(x: Label, n: int) -> Label:
    """The unique sigma-translate of x whose first coordinate is in 1..n."""
    if any(a >= b for a, b in zip(x, x[1:])):
        raise NotIncreasing(f"{x} is not strictly increasing")
    shift = (x[0] - 1) // n
    return tuple(c - shift * n for c in x)


@lru_cache(maxsize=None)
def enumerate_ct_labels(K: KupischSeries) -> tuple[Label, ...]:
    """All canonical cluster-tilting labels, sorted."""
    return _enumerate(K, K.d + 1, "ct")


@lru_cache(maxsize=None)
def enumerate_vertices(K: KupischSeries) -> tuple[Label, ...]:
    """All canonical quiver vertices, sorted."""
    return _enumerate(K, K.d, "vertex")


def _enumerate(K: KupischSeries, arity: int, kind: str) -> tuple[Label, ...]:
    # The span bound caps x_m at x_1 + max(ell) + arity - 2, so extending
    # first coordinates over 1..n inside that window sees every label.
    out = []
    window = max(K.ell) + arity - 1
    for first in range(1, K.n + 1):
        if arity == 1:
            out.append((first,))
            continue
        for rest in combinations(range(first + 1, first + window), arity - 1):
            x = (first, *rest)
            if length_bound_holds(K, x, kind):
                out.append(x)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def cycle_vertices(K: KupischSeries) -> tuple[int, ...]:
    """Vertices of {1..n} lying on a cycle of the graph i -> f_bar(i).

    Every vertex has out-degree one, so i is on a cycle exactly when some
    iterate of f_bar returns to i within n steps.
    """
    on_cycle = []
    for i in range(1, K.n + 1):
        j = i
        for _ in range(K.n):
            j = f_bar(K, j)
            if j == i:
                on_cycle.append(i)
                break
    return tuple(on_cycle)
