"""Cross-check suites pitting the label formulas against the matrix oracle.

Each suite returns a CheckResult with how many items were examined and how
many disagreed; ``data`` carries the raw numbers so runs at different
primes can be compared verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import KupischSeries, enumerate_ct_labels, enumerate_vertices
from .ct import (
    dimension_vector,
    hom_dim,
    is_projective,
    module_dimension,
    projective_label_with_top,
)
from .errors import AmbiguousIdentification, SemisimpleLambda
from .homology import d_syzygy_step
from .oracle import (
    build_algebra,
    check_twisted_periodicity,
    hom_space_dim,
    projective_cover,
    realize,
    stable_hom_dim,
    syzygy_rep,
)
from .singularity import (
    AlgebraSpec,
    analyze,
    b_spec,
    label_to_b,
    lambda_spec,
    wide_labels,
)


@dataclass
class CheckResult:
    name: str
    checked: int
    failed: int
    detail: str = ""
    data: object = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _series_of(spec: AlgebraSpec | KupischSeries) -> tuple[AlgebraSpec, KupischSeries]:
    if isinstance(spec, KupischSeries):
        return AlgebraSpec(spec.d, spec.ell), spec
    return spec, spec.series()


def hom_agreement(spec: AlgebraSpec | KupischSeries, prime: int) -> CheckResult:
    """Window dimension equals solver dimension for every ordered pair."""
    spec, K = _series_of(spec)
    alg = build_algebra(spec, prime)
    labels = enumerate_ct_labels(K)
    reps = {x: realize(alg, x) for x in labels}
    failed = 0
    table = {}
    for x in labels:
        for y in labels:
            predicted = hom_dim(K, x, y)
            solved = hom_space_dim(alg, reps[x], reps[y])
            table[(x, y)] = solved
            if predicted != solved:
                failed += 1
    return CheckResult("hom-agreement", len(labels) ** 2, failed, data=table)


def syzygy_agreement(spec: AlgebraSpec | KupischSeries, prime: int) -> CheckResult:
    """Oracle syzygies land on the predicted labels; Euler sums vanish.

    The identification goes through dimension vectors, so bail out loudly
    if two labels of this algebra ever share one.
    """
    spec, K = _series_of(spec)
    alg = build_algebra(spec, prime)
    labels = enumerate_ct_labels(K)
    signatures = {}
    for x in labels:
        sig = tuple(sorted(dimension_vector(K, x).items()))
        if sig in signatures:
            raise AmbiguousIdentification(
                f"{x} and {signatures[sig]} share a dimension vector"
            )
        signatures[sig] = x
    checked = failed = 0
    table = {}
    for x in labels:
        if is_projective(K, x):
            continue
        checked += 1
        step = d_syzygy_step(K, x)
        ok = True
        # Euler characteristic of 0 -> kernel -> P_d .. P_1 -> M(x) -> 0
        euler = module_dimension(K, x)
        sign = -1
        for term in step.terms:
            euler += sign * module_dimension(K, term)
            sign = -sign
        euler += sign * module_dimension(K, step.kernel)
        ok = ok and euler == 0
        omega = realize(alg, x)
        for _ in range(K.d):  # the predicted kernel is the d-fold syzygy
            omega = syzygy_rep(alg, omega)
        ok = ok and omega.dim_vector() == dimension_vector(K, step.kernel)
        table[x] = tuple(sorted(omega.dim_vector().items()))
        if not ok:
            failed += 1
    return CheckResult("syzygy-formula", checked, failed, data=table)


def wide_transport(K: KupischSeries) -> CheckResult:
    """Hom windows, projectivity and syzygies commute with the relabeling."""
    report = analyze(K)
    if report.trivial:
        return CheckResult("wide-transport", 0, 0, detail="trivial, nothing to map")
    KB = report.b.series()
    wide = wide_labels(K)
    mapped = {x: label_to_b(K, x) for x in wide}
    checked = failed = 0
    for x in wide:
        checked += 1
        if is_projective(K, x) != is_projective(KB, mapped[x]):
            failed += 1
        if not is_projective(K, x):
            here = d_syzygy_step(K, x).kernel
            there = d_syzygy_step(KB, mapped[x]).kernel
            if label_to_b(K, here) != there:
                failed += 1
        for y in wide:
            checked += 1
            if hom_dim(K, x, y) != hom_dim(KB, mapped[x], mapped[y]):
                failed += 1
    return CheckResult("wide-transport", checked, failed)


def periodicity(spec_lambda: AlgebraSpec, prime: int) -> CheckResult:
    if spec_lambda.semisimple:
        return CheckResult(
            "twisted-periodicity", 0, 0, detail="semisimple, stable part is zero"
        )
    try:
        report = check_twisted_periodicity(spec_lambda, prime)
    except SemisimpleLambda:
        return CheckResult(
            "twisted-periodicity", 0, 0, detail="semisimple, stable part is zero"
        )
    return CheckResult(
        "twisted-periodicity",
        len(report.assignments),
        0,
        detail=f"exponent {report.exponent}, direction {report.direction}",
        data=(report.exponent, report.direction, report.assignments),
    )


def stable_endo_total(K: KupischSeries, prime: int) -> CheckResult:
    """Total stable hom dimension over B's labels equals dim Lambda."""
    specB = b_spec(K)
    specL = lambda_spec(K)
    KB = specB.series()
    KL = specL.series()
    alg = build_algebra(specB, prime)
    labels = enumerate_ct_labels(KB)
    reps = {x: realize(alg, x) for x in labels}
    covers = {x: projective_cover(alg, reps[x]) for x in labels}
    total = sum(
        stable_hom_dim(alg, reps[x], reps[y], cover=covers[y])
        for x in labels
        for y in labels
    )
    expected = sum(
        module_dimension(KL, projective_label_with_top(KL, v))
        for v in enumerate_vertices(KL)
    )
    failed = 0 if total == expected else 1
    return CheckResult(
        "stable-endomorphism-total",
        len(labels) ** 2,
        failed,
        detail=f"total {total}, expected {expected}",
        data=(total, expected),
    )


VERIFY_CHECKS = ("homs", "syzygy", "transport", "periodicity")


def run_verify(K: KupischSeries, prime: int, names) -> list[CheckResult]:
    """The cross-check suites behind the command-line ``verify``."""
    results = []
    report = analyze(K)
    if "homs" in names:
        results.append(hom_agreement(K, prime))
    if "syzygy" in names:
        results.append(syzygy_agreement(K, prime))
    if "transport" in names:
        results.append(wide_transport(K))
    if "periodicity" in names:
        if report.trivial:
            results.append(
                CheckResult(
                    "twisted-periodicity", 0, 0, detail="trivial singular part"
                )
            )
        else:
            results.append(periodicity(report.lam, prime))
            if not report.lam.semisimple:
                results.append(stable_endo_total(K, prime))
    return results
