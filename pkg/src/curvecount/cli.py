"""Command-line front end.

Subcommands
-----------
grass EXPR            evaluate an intersection-theory expression
count lines|conics    run a curve-counting recipe
equivalence           bookkeeping weights for families and multiple covers
ledger check [FILE]   verify degeneration ledgers (builtin set by default)
verify --suite NAME   run a self-check suite

Every subcommand takes --json for machine-readable output.  Exit codes:
0 on success, 1 on bad input or a failed verification, 2 on internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import dsl
from .recipes import (
    builtin_ledgers,
    conics_on_quintic_type,
    equivalence_unobstructed,
    ledger_check,
    lines_on_complete_intersection,
    load_ledger_file,
    multiple_cover_weight,
)
from .suites import SUITE_NAMES, run_suite


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; this interface reserves
    2 for internal faults, so usage problems exit 1 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _int_list(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}") from None


def build_parser() -> _Parser:
    parser = _Parser(prog="curvecount", description="Exact curve counts via Chern class integrals.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_grass = sub.add_parser("grass", parents=[_json_flag()],
                             help="evaluate an expression like 'integrate(sigma[1]^6) in G(2,5)'")
    p_grass.add_argument("expression", help="expression with a context clause")

    p_count = sub.add_parser("count", help="run a counting recipe")
    count_sub = p_count.add_subparsers(dest="recipe", required=True, metavar="recipe")
    p_lines = count_sub.add_parser("lines", parents=[_json_flag()],
                                   help="lines on a complete intersection")
    p_lines.add_argument("--ambient", type=int, required=True, metavar="N",
                         help="dimension of the ambient projective space")
    p_lines.add_argument("--degrees", type=_int_list, required=True, metavar="d1,d2,...",
                         help="degrees of the defining equations")
    p_conics = count_sub.add_parser("conics", parents=[_json_flag()],
                                    help="conics on a hypersurface in P^4")
    p_conics.add_argument("--degree", type=int, required=True, metavar="d",
                          help="degree of the hypersurface")

    p_equiv = sub.add_parser("equivalence", parents=[_json_flag()],
                             help="contribution of a family or a multiple cover")
    group = p_equiv.add_mutually_exclusive_group(required=True)
    group.add_argument("--family-dim", type=int, metavar="K",
                       help="dimension of one connected unobstructed family piece")
    group.add_argument("--cover", type=int, metavar="M",
                       help="weight of degree-M covers of a rigid rational curve")
    p_equiv.add_argument("--chern-integrals", type=_int_list, metavar="v0,v1,...",
                         help="precomputed obstruction-class integrals, indexed by family dimension")

    p_ledger = sub.add_parser("ledger", help="degeneration-ledger operations")
    ledger_sub = p_ledger.add_subparsers(dest="action", required=True, metavar="action")
    p_check = ledger_sub.add_parser("check", parents=[_json_flag()],
                                    help="verify that ledger components sum to their totals")
    p_check.add_argument("file", nargs="?", default=None,
                         help="ledger JSON file (builtin ledgers when omitted)")

    p_verify = sub.add_parser("verify", parents=[_json_flag()], help="run a self-check suite")
    p_verify.add_argument("--suite", choices=SUITE_NAMES, required=True,
                          help="which checks to run")
    p_verify.add_argument("--seed", type=int, default=2026,
                          help="seed for the randomized property checks")

    return parser


def _json_flag() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", help="emit JSON instead of text")
    return shared


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=False))


def _cmd_grass(args) -> int:
    start = time.perf_counter()
    try:
        query = dsl.parse(args.expression)
        result = dsl.evaluate(query)
    except dsl.DSLError as exc:
        print(exc.diagnostic(), file=sys.stderr)
        return 1
    elapsed = (time.perf_counter() - start) * 1000
    if args.json:
        value = result.value if result.kind == "integer" else result.rendered
        _emit({
            "query": dsl.render(query),
            "context": result.context,
            "result": {"kind": result.kind, "value": value},
            "timings_ms": round(elapsed, 3),
        })
    else:
        print(result.rendered)
    return 0


def _report_payload(report, elapsed: float) -> dict:
    if report.count is not None:
        outcome = {"count": report.count}
    else:
        outcome = {"family_dimension": report.family_dimension}
    return {
        "recipe": report.recipe,
        "ambient_dim": report.ambient_dim,
        "degrees": list(report.degrees),
        "moduli_dim": report.moduli_dim,
        "bundle_rank": report.bundle_rank,
        "outcome": outcome,
        "calabi_yau": report.calabi_yau,
        "timings_ms": round(elapsed, 3),
    }


def _cmd_count(args) -> int:
    start = time.perf_counter()
    try:
        if args.recipe == "lines":
            report = lines_on_complete_intersection(args.ambient, args.degrees)
        else:
            report = conics_on_quintic_type(args.degree)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    elapsed = (time.perf_counter() - start) * 1000
    if args.json:
        _emit(_report_payload(report, elapsed))
    else:
        print(report.describe())
    return 0


def _cmd_equivalence(args) -> int:
    if args.cover is not None:
        if args.chern_integrals is not None:
            print("error: --chern-integrals only applies to --family-dim", file=sys.stderr)
            return 1
        try:
            weight = multiple_cover_weight(args.cover)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        if args.json:
            _emit({"recipe": "multiple-cover", "cover_degree": args.cover, "weight": str(weight)})
        else:
            print(f"degree-{args.cover} covers of a rigid rational curve each weigh {weight}")
        return 0
    integrals = list(args.chern_integrals) if args.chern_integrals is not None else None
    try:
        value = equivalence_unobstructed(args.family_dim, integrals)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        _emit({
            "recipe": "family-equivalence",
            "family_dim": args.family_dim,
            "equivalence": value,
            "note": "covers one connected unobstructed family piece",
        })
    else:
        print(f"equivalence of the {args.family_dim}-dimensional family piece: {value}")
        print("(one connected unobstructed piece; sum the pieces to count curves)")
    return 0


def _cmd_ledger(args) -> int:
    try:
        if args.file is None:
            ledgers = [ledger for _, ledger in sorted(builtin_ledgers().items())]
        else:
            ledgers = load_ledger_file(args.file)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    reports = [ledger_check(ledger) for ledger in ledgers]
    if args.json:
        _emit({
            "ledgers": [
                {
                    "name": rep.name,
                    "total": rep.total,
                    "computed": rep.computed,
                    "residual": rep.residual,
                    "ok": rep.ok,
                }
                for rep in reports
            ],
            "ok": all(rep.ok for rep in reports),
        })
    else:
        for rep in reports:
            if rep.ok:
                print(f"PASS {rep.name}: components sum to {rep.total}")
            else:
                print(f"FAIL {rep.name}: total {rep.total}, components sum to {rep.computed} "
                      f"(residual {rep.residual})")
        bad = sum(1 for rep in reports if not rep.ok)
        print(f"{len(reports)} ledgers, {bad} failed")
    return 0 if all(rep.ok for rep in reports) else 1


def _cmd_verify(args) -> int:
    start = time.perf_counter()
    checks = run_suite(args.suite, seed=args.seed)
    elapsed = (time.perf_counter() - start) * 1000
    ok = all(c.passed for c in checks)
    if args.json:
        _emit({
            "suite": args.suite,
            "checks": [
                {"name": c.name, "expected": c.expected, "actual": c.actual, "passed": c.passed}
                for c in checks
            ],
            "passed": ok,
            "timings_ms": round(elapsed, 3),
        })
    else:
        for c in checks:
            if c.passed:
                print(f"PASS {c.name}: {c.actual}")
            else:
                print(f"FAIL {c.name}: expected {c.expected}, got {c.actual}")
        failed = sum(1 for c in checks if not c.passed)
        print(f"{len(checks)} checks, {failed} failed")
    return 0 if ok else 1


_HANDLERS = {
    "grass": _cmd_grass,
    "count": _cmd_count,
    "equivalence": _cmd_equivalence,
    "ledger": _cmd_ledger,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 0 if code is None else 1
    try:
        return _HANDLERS[args.command](args)
    except Exception as exc:  # anything a handler did not expect
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
