"""Command-line front end.

Every computation in the package is reachable here with deterministic
text or JSON output, plus a ``sweep`` subcommand that re-verifies the
expansion identities, the alternating-sum theorem, the involution
invariants and the quasi/atom union identity over an exhaustive grid of
shapes.  Exit codes: 0 success, 1 verification failure or internal
invariant violation, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import product

from .compositions import WeakComposition, dominating_set, is_weakly_decreasing_nonzero
from .expansions import (
    alternating_sums,
    expansion,
    verify_atom_kaon_identity,
    verify_quasi_glide_identity,
)
from .glides import enumerate_mesonic_glides, glide_polynomial, kaon
from .involution import (
    InvolutionError,
    chosen_value_oracle,
    modified_entry,
    pairing,
    predicted_fixed_point,
)
from .skyline import (
    Family,
    enumerate_atom_fillings,
    enumerate_meson_highest,
    enumerate_quasi_fillings,
    enumerate_quasi_yamanouchi,
    lascoux_atom,
    lift_rows,
    quasi_lascoux,
)

CHECK_NAMES = ("identities", "alternating_sums", "involution", "union_identity")

_FAMILIES = {
    "a2p": Family.MESON_HIGHEST,
    "q2f": Family.QUASI_YAMANOUCHI,
}

_TABLEAU_SETS = {
    "a2p": enumerate_meson_highest,
    "q2f": enumerate_quasi_yamanouchi,
    "assf": enumerate_atom_fillings,
    "qssf": enumerate_quasi_fillings,
}


def _shape_argument(text: str) -> WeakComposition:
    try:
        return WeakComposition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _print_polynomial(poly, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(poly.json_terms()))
    elif fmt == "latex":
        print(poly.latex())
    else:
        print(poly.text())


def _cmd_polynomial(args, compute) -> int:
    poly = compute(args.shape)
    if args.beta is not None:
        poly = poly.specialize_beta(args.beta)
    _print_polynomial(poly, args.format)
    return 0


def _cmd_glides(args) -> int:
    glides = enumerate_mesonic_glides(args.shape)
    if args.format == "json":
        print(json.dumps({"a": list(args.shape), "glides": [str(g) for g in glides]}))
    else:
        for g in glides:
            print(g)
    return 0


def _cmd_tableaux(args) -> int:
    fillings = _TABLEAU_SETS[args.family](args.shape)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "a": list(args.shape),
                    "family": args.family,
                    "tableaux": [T.to_json() for T in fillings],
                }
            )
        )
    else:
        for T in fillings:
            print(T.line())
    return 0


def _cmd_expand(args) -> int:
    table = expansion(args.shape, _FAMILIES[args.base])
    if args.format == "json":
        payload = table.to_json()
        if args.beta is not None:
            payload["beta_sum"] = table.evaluate(args.beta)
        print(json.dumps(payload))
    else:
        for b, (m, k) in table.sorted_items():
            print(f"{b}  m={m} k={k}")
        if args.beta is not None:
            print(f"beta_sum({args.beta}) = {table.evaluate(args.beta)}")
    return 0


def _cmd_altsum(args) -> int:
    q_sum, m_sum = alternating_sums(args.shape)
    decreasing = is_weakly_decreasing_nonzero(args.shape)
    expected = 1 if decreasing else 0
    ok = q_sum == expected and m_sum == expected
    if args.format == "json":
        print(
            json.dumps(
                {
                    "a": list(args.shape),
                    "q_sum": q_sum,
                    "m_sum": m_sum,
                    "weakly_decreasing": decreasing,
                    "pass": ok,
                }
            )
        )
    else:
        wording = "weakly decreasing" if decreasing else "not weakly decreasing"
        verdict = "PASS" if ok else "FAIL"
        print(f"({q_sum}, {m_sum}) — nonzero parts {wording}: {verdict}")
    return 0 if ok else 1


def _cmd_pairing(args) -> int:
    report = pairing(args.shape, _FAMILIES[args.family])
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        print(report.text())
    return 0


# ---------------------------------------------------------------------------
# sweep


def _check_identities(a: WeakComposition) -> bool:
    return verify_atom_kaon_identity(a) and verify_quasi_glide_identity(a)


def _check_alternating_sums(a: WeakComposition) -> bool:
    expected = 1 if is_weakly_decreasing_nonzero(a) else 0
    return alternating_sums(a) == (expected, expected)


def _check_union_identity(a: WeakComposition) -> bool:
    lifted = [
        lift_rows(T, a)
        for b in dominating_set(a)
        for T in enumerate_atom_fillings(b)
    ]
    lifted.sort(key=lambda T: T.sort_key())
    return lifted == enumerate_quasi_fillings(a)


def _check_involution(a: WeakComposition) -> bool:
    expected_fixed = 1 if is_weakly_decreasing_nonzero(a) else 0
    q_sum, m_sum = alternating_sums(a)
    targets = {Family.MESON_HIGHEST: q_sum, Family.QUASI_YAMANOUCHI: m_sum}
    for family, target in targets.items():
        try:
            report = pairing(a, family)
        except InvolutionError:
            return False
        if len(report.fixed_points) != expected_fixed:
            return False
        if report.fixed_points:
            fp = report.fixed_points[0]
            if fp != predicted_fixed_point(a) or fp.free_count != 0:
                return False
        if report.signed_count() != target:
            return False
        for T, U in report.pairs:
            _, _, value, _ = modified_entry(T, U)
            if chosen_value_oracle(T, family) != value:
                return False
            if chosen_value_oracle(U, family) != value:
                return False
        for T in report.fixed_points:
            if chosen_value_oracle(T, family) is not None:
                return False
    return True


_CHECK_FUNCTIONS = {
    "identities": _check_identities,
    "alternating_sums": _check_alternating_sums,
    "involution": _check_involution,
    "union_identity": _check_union_identity,
}


def run_shape_checks(a: WeakComposition, checks: tuple[str, ...] = CHECK_NAMES) -> dict:
    """Run the selected sweep checks on one shape."""
    results = {name: _CHECK_FUNCTIONS[name](a) for name in checks}
    return {"a": list(a), "checks": results, "pass": all(results.values())}


def _worker_count(n_jobs: int) -> int:
    raw = os.environ.get("KATOM_THREADS", "1").strip() or "1"
    try:
        requested = int(raw)
    except ValueError:
        requested = 1
    if requested == 0:
        requested = os.cpu_count() or 1
    return max(1, min(requested, max(n_jobs, 1)))


def _cmd_sweep(args) -> int:
    checks = tuple(args.checks) if args.checks else CHECK_NAMES
    shapes = [
        WeakComposition(entries)
        for entries in product(range(args.max_entry + 1), repeat=args.max_length)
    ]
    workers = _worker_count(len(shapes))

    def job(shape: WeakComposition) -> dict:
        return run_shape_checks(shape, checks)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(job, shapes))
    else:
        results = [job(shape) for shape in shapes]

    failures = 0
    for shape, result in zip(shapes, results):
        if not result["pass"]:
            failures += 1
        if args.format == "json":
            print(json.dumps(result))
        elif result["pass"]:
            print(f"{shape} PASS")
        else:
            failed = ",".join(name for name in checks if not result["checks"][name])
            print(f"{shape} FAIL {failed}")
    if args.format == "json":
        print(json.dumps({"shapes": len(shapes), "failures": failures}))
    else:
        print(f"{len(shapes)} shapes, {failures} failures")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="katom",
        description="Exact engine for kaons, Lascoux atoms, glide and quasiLascoux polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_shape(p):
        p.add_argument("--shape", type=_shape_argument, required=True, metavar="S",
                       help="comma-separated shape, e.g. 0,2,0,1")

    def add_format(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    for name, compute, blurb in (
        ("kaon", kaon, "kaon of a shape"),
        ("atom", lascoux_atom, "Lascoux atom of a shape"),
        ("glide", glide_polynomial, "glide polynomial of a shape"),
        ("quasilascoux", quasi_lascoux, "quasiLascoux polynomial of a shape"),
    ):
        p = sub.add_parser(name, help=blurb)
        add_shape(p)
        add_format(p, ("text", "json", "latex"))
        p.add_argument("--beta", type=int, default=None,
                       help="specialize beta to this integer")
        p.set_defaults(run=lambda args, fn=compute: _cmd_polynomial(args, fn))

    p = sub.add_parser("glides", help="mesonic glides of a shape")
    add_shape(p)
    add_format(p)
    p.set_defaults(run=_cmd_glides)

    p = sub.add_parser("tableaux", help="tableaux of one family for a shape")
    add_shape(p)
    p.add_argument("--family", choices=sorted(_TABLEAU_SETS), required=True)
    add_format(p)
    p.set_defaults(run=_cmd_tableaux)

    p = sub.add_parser("expand", help="expansion coefficient table")
    add_shape(p)
    p.add_argument("--base", choices=sorted(_FAMILIES), required=True)
    add_format(p)
    p.add_argument("--beta", type=int, default=None,
                   help="also report the coefficient sum at this beta")
    p.set_defaults(run=_cmd_expand)

    p = sub.add_parser("altsum", help="both alternating sums with the expected verdict")
    add_shape(p)
    add_format(p)
    p.set_defaults(run=_cmd_altsum)

    p = sub.add_parser("pairing", help="involution pairing report")
    add_shape(p)
    p.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    add_format(p)
    p.set_defaults(run=_cmd_pairing)

    p = sub.add_parser("sweep", help="verify all checks over an exhaustive grid of shapes")
    p.add_argument("--max-length", type=int, required=True, metavar="L",
                   help="shapes have exactly this length")
    p.add_argument("--max-entry", type=int, required=True, metavar="E",
                   help="entries range over 0..E")
    p.add_argument("--checks", nargs="+", choices=CHECK_NAMES, default=None)
    add_format(p)
    p.set_defaults(run=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_length", 1) < 1 or getattr(args, "max_entry", 1) < 1:
        parser.error("--max-length and --max-entry must be at least 1")
    try:
        return args.run(args)
    except InvolutionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
