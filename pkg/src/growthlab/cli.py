"""Command-line interface.

Subcommands: chartable, growth, fusion, asym, bounds, pl, verify.  Exit
codes: 0 success, 1 usage error, 2 input validation error, 3 verification
mismatch.  Identical invocations produce byte-identical output; every
machine-readable field is an exact integer or rational string, and decimal
renderings (12 significant digits) are display-only.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from . import verify
from .diagrams import Family
from .errors import InputError, SingularMatrixError, VerificationError
from .fusion import fusion_matrix, realized_n0, scc_analysis, to_dot, to_json as fusion_to_json
from .growth import (
    an_constant,
    evaluate,
    involution_sum,
    leading_term,
    length_series,
    linear_monoid_constant,
    m0_upper_bound,
    module_spec,
    multiplicity_series,
    n0_upper_bound,
)
from .tables import (
    INFINITY,
    PLParams,
    ancestorless,
    pl_digits,
    pl_support,
    simple_table,
    table_of_kind,
    table_to_csv,
    table_to_json,
)

USAGE_ERROR, INPUT_ERROR, VERIFY_ERROR = 1, 2, 3

_FAMILIES = {
    "pro": Family.PLANAR_ROOK,
    "planar-rook": Family.PLANAR_ROOK,
    "tl": Family.TEMPERLEY_LIEB,
    "temperley-lieb": Family.TEMPERLEY_LIEB,
    "mo": Family.MOTZKIN,
    "motzkin": Family.MOTZKIN,
    "rook": Family.ROOK,
    "brauer": Family.BRAUER,
    "rook-brauer": Family.ROOK_BRAUER,
    "partition": Family.PARTITION,
    "full-transformation": Family.FULL_TRANSFORMATION,
    "partial-transformation": Family.PARTIAL_TRANSFORMATION,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _family(name: str) -> Family:
    try:
        return _FAMILIES[name.lower()]
    except KeyError:
        raise InputError(f"unknown family {name!r} (choose from {sorted(_FAMILIES)})")


def _decimal12(x: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 12
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def _parse_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    n = int(text)
    return range(n, n + 1)


def _parse_p(text: str):
    if text.lower() in ("inf", "infinity", "oo"):
        return INFINITY
    return int(text)


def _build_parser() -> _Parser:
    parser = _Parser(prog="growthlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chartable", help="emit a character table")
    p.add_argument("--family", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument(
        "--kind",
        default="cell",
        choices=["cell", "simple", "projective", "cell-inverse"],
    )
    p.add_argument("--format", default="text", choices=["text", "json", "csv"])

    p = sub.add_parser("growth", help="growth formulas and value tables")
    p.add_argument("statistic", choices=["length", "multiplicity"])
    p.add_argument("--family", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--module", required=True, help="module selector, e.g. V3, S1, P2")
    p.add_argument("--target", help="target simple label (multiplicity only)")
    p.add_argument("--n", default="1..6", help="evaluation range, e.g. 1..6")
    p.add_argument("--format", default="text", choices=["text", "json", "csv"])

    p = sub.add_parser("fusion", help="fusion graph of tensoring with a module")
    p.add_argument("--family", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--module", required=True)
    p.add_argument("--dot", help="write DOT text to this path")
    p.add_argument("--format", default="text", choices=["text", "json", "dot"])

    p = sub.add_parser("asym", help="asymptotic constants")
    asub = p.add_subparsers(dest="what", required=True)
    q = asub.add_parser("an")
    q.add_argument("--family", required=True)
    q.add_argument("--m", type=int, required=True)
    q = asub.add_parser("linear-monoid")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q = asub.add_parser("involutions")
    q.add_argument("--m", type=int, required=True)

    p = sub.add_parser("bounds", help="bounds on n0 / m0")
    bsub = p.add_subparsers(dest="which", required=True)
    q = bsub.add_parser("n0")
    q.add_argument("--l-classes", type=int, required=True)
    q.add_argument("--semigroup", action="store_true")
    q = bsub.add_parser("m0")
    q.add_argument("--l-classes", type=int, required=True)
    q.add_argument("--group-order", type=int, required=True)
    q.add_argument("--scalar-order", type=int, required=True)

    p = sub.add_parser("pl", help="(p,l) digit arithmetic")
    p.add_argument("what", choices=["digits", "support", "ancestorless"])
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--p", default="inf")
    p.add_argument("--l", type=int, default=3)

    p = sub.add_parser("verify", help="run the oracle cross-check suite")
    p.add_argument("--suite", default="all", choices=["all", *verify.SUITES])
    p.add_argument("--max-m", type=int)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.add_argument(
        "--verbose",
        action="store_true",
        help="also print the canonical rank idempotents in diagram text form",
    )
    return parser


def _cmd_chartable(args) -> int:
    table = table_of_kind(_family(args.family), args.m, args.kind.replace("-", "_"))
    if args.format == "json":
        print(table_to_json(table))
    elif args.format == "csv":
        print(table_to_csv(table), end="")
    else:
        print(f"{table.family.value} m={table.m} kind={table.kind}")
        print(table_to_csv(table), end="")
    return 0


def _cmd_growth(args) -> int:
    family = _family(args.family)
    spec = module_spec(family, args.m, args.module)
    table = simple_table(family, args.m)
    if args.statistic == "multiplicity":
        if args.target is None:
            raise InputError("multiplicity needs --target")
        target = int(args.target.lstrip("Vv"))
        series = multiplicity_series(spec, table, target)
    else:
        series = length_series(spec, table)
    asym = leading_term(series)
    rows = []
    for n in _parse_range(args.n):
        value = evaluate(series, n)
        k = evaluate(asym, n)
        ratio = value / k if k else Fraction(0)
        rows.append((n, value, k, ratio))
    if args.format == "json":
        payload = {
            "family": family.value,
            "m": args.m,
            "module": spec.label,
            "statistic": args.statistic,
            "formula": series.to_json(),
            "human": series.human(),
            "values": [
                {
                    "n": n,
                    "l": str(value),
                    "k": str(k),
                    "ratio": str(ratio),
                    "ratio_decimal": _decimal12(ratio),
                }
                for n, value, k, ratio in rows
            ],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print("n,l,k,ratio,ratio_decimal")
        for n, value, k, ratio in rows:
            print(f"{n},{value},{k},{ratio},{_decimal12(ratio)}")
    else:
        print(f"{args.statistic} of {spec.label} over {family.value} m={args.m}")
        print(f"formula: {series.human()}")
        print("n,l,k,ratio,ratio_decimal")
        for n, value, k, ratio in rows:
            print(f"{n},{value},{k},{ratio},{_decimal12(ratio)}")
    return 0


def _cmd_fusion(args) -> int:
    family = _family(args.family)
    spec = module_spec(family, args.m, args.module)
    graph = fusion_matrix(spec, simple_table(family, args.m))
    report = scc_analysis(graph)
    n0 = realized_n0(graph, set(report.absorbing)) if report.absorbing else None
    dot = to_dot(graph)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
    if args.format == "dot":
        print(dot, end="")
        return 0
    if args.format == "json":
        payload = json.loads(fusion_to_json(graph))
        payload["n0"] = n0
        payload["components"] = [list(c) for c in report.components]
        print(json.dumps(payload, indent=2))
        return 0
    print(f"fusion graph of {spec.label} over {family.value} m={args.m}")
    print("adjacency rows (target-by-source):")
    for label, row in zip(graph.labels, graph.adjacency.rows):
        print(f"  V{label}: " + " ".join(str(int(x)) for x in row))
    print(f"absorbing: {list(report.absorbing)}")
    print(f"realized n0 into absorbing: {n0}")
    print(f"components: {[list(c) for c in report.components]}")
    return 0


def _cmd_asym(args) -> int:
    if args.what == "an":
        value = an_constant(_family(args.family), args.m)
        print(f"{value} = {_decimal12(value)}")
    elif args.what == "linear-monoid":
        value = linear_monoid_constant(args.p, args.r)
        print(f"{value} = {_decimal12(value)}")
    else:
        total, dims = involution_sum(args.m)
        print(f"sum: {total} = {_decimal12(total)}; total dimension: {dims}")
    return 0


def _cmd_bounds(args) -> int:
    if args.which == "n0":
        print(n0_upper_bound(args.l_classes, semigroup=args.semigroup))
    else:
        print(m0_upper_bound(args.l_classes, args.group_order, args.scalar_order))
    return 0


def _cmd_pl(args) -> int:
    params = PLParams(_parse_p(args.p), args.l)
    if args.what == "digits":
        print(pl_digits(args.a, params))
    elif args.what == "support":
        print(sorted(pl_support(args.a, params)))
    else:
        print(ancestorless(args.a, params))
    return 0


def _cmd_verify(args) -> int:
    results = verify.run_suite(args.suite, args.max_m)
    failures = [r for r in results if not r.ok]
    if args.format == "json":
        print(verify.report_json(results))
    else:
        if args.verbose:
            for family, m, j, text in verify.canonical_idempotent_texts(args.max_m):
                print(f"idempotent {family.value} m={m} rank={j}: {text}")
        for r in results:
            if r.ok:
                print(f"ok   {r.check}")
            else:
                print(f"FAIL {r.check}: {r.lhs} != {r.rhs} @ {r.location}")
        print(f"{len(results) - len(failures)}/{len(results)} checks passed")
    return VERIFY_ERROR if failures else 0


_COMMANDS = {
    "chartable": _cmd_chartable,
    "growth": _cmd_growth,
    "fusion": _cmd_fusion,
    "asym": _cmd_asym,
    "bounds": _cmd_bounds,
    "pl": _cmd_pl,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return _COMMANDS[args.command](args)
    except (InputError, SingularMatrixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return VERIFY_ERROR


if __name__ == "__main__":
    sys.exit(main())
