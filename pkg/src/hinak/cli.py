"""Command-line surface: analyze, quiver, verify.

Exit codes: 0 success, 1 verification failure, 2 input error.  The env var
HINAK_PRIME overrides the default field characteristic used by verify.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .checks import run_verify
from .combinatorics import (
    enumerate_ct_labels,
    enumerate_vertices,
    validate_kupisch,
)
from .ct import Quiver, ct_quiver, gabriel_quiver
from .errors import HinakError
from .singularity import SingularityReport, analyze, wide_quiver

DEFAULT_PRIME = 32003
ALL_CHECKS = ("homs", "syzygy", "transport", "periodicity")


def _parse_ell(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise HinakError(f"cannot parse --ell value {text!r}") from exc


def _spec_dict(spec) -> dict:
    return {"d": spec.d, "n": spec.n, "ell": list(spec.ell)}


def report_document(K, report: SingularityReport, verification=None) -> dict:
    doc = {
        "schema": "hinak/1",
        "input": _spec_dict(report.algebra),
        "resolution_quiver": {
            "edges": [[i, report.resolution.edge(i)] for i in range(1, K.n + 1)],
            "J": list(report.resolution.J),
        },
        "derived": {
            "n_prime": report.n_prime,
            "ell_prime": report.ell_prime,
            "trivial": report.trivial,
        },
        "B": None if report.b is None else _spec_dict(report.b),
        "Lambda": None
        if report.lam is None
        else {**_spec_dict(report.lam), "semisimple": report.lam.semisimple},
        "counts": {
            "ct_labels": len(enumerate_ct_labels(K)),
            "vertices": len(enumerate_vertices(K)),
            "wide_labels": len(report.wide),
        },
        "label_dictionary": None
        if report.dictionary is None
        else [[list(a), list(b)] for a, b in sorted(report.dictionary)],
        "verification": verification,
    }
    return doc


def _node_id(label) -> str:
    return "v" + "_".join(str(c) for c in label)


def dot_resolution(rq) -> str:
    lines = ["digraph resolution {"]
    for i in range(1, rq.n + 1):
        lines.append(f"  {i};")
    for i in range(1, rq.n + 1):
        lines.append(f"  {i} -> {rq.edge(i)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_quiver(q: Quiver, name: str) -> str:
    lines = [f"digraph {name} {{"]
    for v in sorted(q.vertices):
        display = "(" + ",".join(str(c) for c in v) + ")"
        lines.append(f'  {_node_id(v)} [label="{display}"];')
    for src, _, dst in sorted(q.arrows):
        lines.append(f"  {_node_id(src)} -> {_node_id(dst)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    K = validate_kupisch(args.d, _parse_ell(args.ell))
    doc = report_document(K, analyze(K))
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def cmd_quiver(args) -> int:
    K = validate_kupisch(args.d, _parse_ell(args.ell))
    if args.kind == "resolution":
        text = dot_resolution(analyze(K).resolution)
    elif args.kind == "gabriel":
        text = dot_quiver(gabriel_quiver(K), "gabriel")
    elif args.kind == "ct":
        text = dot_quiver(ct_quiver(K), "ct")
    else:
        text = dot_quiver(wide_quiver(K), "wide")
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    K = validate_kupisch(args.d, _parse_ell(args.ell))
    prime = args.prime
    if prime is None:
        prime = int(os.environ.get("HINAK_PRIME", DEFAULT_PRIME))
    names = [part.strip() for part in args.checks.split(",") if part.strip()]
    if "all" in names:
        names = list(ALL_CHECKS)
    unknown = [n for n in names if n not in ALL_CHECKS]
    if unknown:
        raise HinakError(f"unknown checks {unknown}; pick from {ALL_CHECKS + ('all',)}")
    results = run_verify(K, prime, names)
    for res in results:
        status = "ok" if res.ok else "FAIL"
        extra = f", {res.detail}" if res.detail else ""
        print(f"{res.name}: checked {res.checked}, failed {res.failed}{extra} [{status}]")
    all_ok = all(res.ok for res in results)
    print(f"VERIFY: {'PASS' if all_ok else 'FAIL'} (prime {prime})")
    return 0 if all_ok else 1


def _add_algebra_flags(sub) -> None:
    sub.add_argument("--d", type=int, required=True, help="dimension parameter d >= 1")
    sub.add_argument(
        "--ell", required=True, help="comma-separated cyclic Loewy lengths"
    )
    sub.add_argument("--out", default=None, help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hinak",
        description="higher Nakayama algebras: cluster-tilting data, "
        "resolution quivers, singularity presentations, oracle checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="full JSON report for (d, ell)")
    _add_algebra_flags(p_analyze)
    p_analyze.add_argument("--format", choices=("json",), default="json")
    p_analyze.set_defaults(func=cmd_analyze)

    p_quiver = sub.add_parser("quiver", help="DOT diagram of a chosen quiver")
    p_quiver.add_argument(
        "--kind", choices=("resolution", "gabriel", "ct", "wide"), required=True
    )
    _add_algebra_flags(p_quiver)
    p_quiver.set_defaults(func=cmd_quiver)

    p_verify = sub.add_parser("verify", help="run the oracle cross-check suites")
    _add_algebra_flags(p_verify)
    p_verify.add_argument("--prime", type=int, default=None)
    p_verify.add_argument(
        "--checks",
        default="all",
        help="comma list from homs,syzygy,transport,periodicity,all",
    )
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HinakError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
