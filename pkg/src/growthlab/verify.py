"""Cross-check harness behind `growthlab verify` and the acceptance tests.

Every check compares two independent routes to the same value — closed-form
tables against brute-force diagram traces, growth formulas against oracle
multiplicities, fusion data against golden matrices — and records a
machine-readable result.  All comparisons are exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import oracle, reference
from .diagrams import Family, class_idempotent, max_enumerable_m, rank_labels
from .errors import VerificationError
from .fusion import fusion_matrix, power_multiplicities, realized_n0, scc_analysis, spectral_check
from .growth import evaluate, length_series, module_spec, multiplicity_series
from .linalg import Mat, inverse
from .tables import (
    cell_inverse,
    cell_table,
    check_motzkin_simple_closed_form,
    projective_table,
    simple_table,
)

SUITES = ("counts", "tables", "growth", "fusion")


@dataclass(frozen=True)
class CheckResult:
    check: str
    status: str  # "ok" or "fail"
    lhs: str
    rhs: str
    location: str

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def _result(name: str, lhs, rhs, location: str) -> CheckResult:
    same = lhs == rhs
    return CheckResult(
        check=name,
        status="ok" if same else "fail",
        lhs=repr(lhs) if not same else "match",
        rhs=repr(rhs) if not same else "match",
        location=location,
    )


def _oracle_bounds(max_m: int | None) -> dict[Family, int]:
    bounds = {
        Family.PLANAR_ROOK: 6,
        Family.TEMPERLEY_LIEB: 7,
        Family.MOTZKIN: 5,
    }
    if max_m is not None:
        bounds = {f: min(b, max_m) for f, b in bounds.items()}
    return {f: min(b, max_enumerable_m(f)) for f, b in bounds.items()}


def _int_rows(mat: Mat) -> tuple[tuple[int, ...], ...]:
    return mat.int_rows()


# ---------------------------------------------------------------------------
# suites

def check_counts(max_m: int | None = None) -> list[CheckResult]:
    out = []
    for family, bound in _oracle_bounds(max_m).items():
        for m in range(1, bound + 1):
            try:
                cc = oracle.count_check(family, m)
                out.append(_result(f"count:{family.value}:{m}", cc.actual, cc.expected, "oracle.count_check"))
            except VerificationError as exc:
                out.append(CheckResult(f"count:{family.value}:{m}", "fail", str(exc), "", "oracle.count_check"))
    return out


def check_tables(max_m: int | None = None) -> list[CheckResult]:
    out = []
    for family, bound in _oracle_bounds(max_m).items():
        for m in range(1, bound + 1):
            loc = f"{family.value} m={m}"
            out.append(
                _result(
                    f"oracle-cell:{family.value}:{m}",
                    cell_table(family, m).mat,
                    oracle.oracle_cell_table(family, m),
                    loc,
                )
            )
            out.append(
                _result(
                    f"oracle-simple:{family.value}:{m}",
                    simple_table(family, m).mat,
                    oracle.oracle_simple_table(family, m),
                    loc,
                )
            )
    # golden printed tables (with documented errata applied)
    out.append(
        _result(
            "golden:tl7-cell",
            _int_rows(cell_table(Family.TEMPERLEY_LIEB, 7).mat),
            reference.TL7_CELL,
            "reference.TL7_CELL",
        )
    )
    out.append(
        _result(
            "golden:tl7-simple",
            _int_rows(simple_table(Family.TEMPERLEY_LIEB, 7).mat),
            reference.TL7_SIMPLE,
            "reference.TL7_SIMPLE",
        )
    )
    out.append(
        _result(
            "golden:tl7-projective",
            _int_rows(projective_table(Family.TEMPERLEY_LIEB, 7).mat),
            reference.TL7_PROJECTIVE,
            "reference.TL7_PROJECTIVE (erratum row 7 corrected)",
        )
    )
    out.append(
        _result(
            "golden:mo5-cell",
            _int_rows(cell_table(Family.MOTZKIN, 5).mat),
            reference.MO5_CELL,
            "reference.MO5_CELL",
        )
    )
    out.append(
        _result(
            "golden:mo5-simple",
            _int_rows(simple_table(Family.MOTZKIN, 5).mat),
            reference.MO5_SIMPLE,
            "reference.MO5_SIMPLE",
        )
    )
    out.append(
        _result(
            "golden:mo5-projective",
            _int_rows(projective_table(Family.MOTZKIN, 5).mat),
            reference.MO5_PROJECTIVE,
            "reference.MO5_PROJECTIVE (errata entries corrected)",
        )
    )
    for m in range(1, 9):
        table = cell_table(Family.PLANAR_ROOK, m)
        pascal = tuple(tuple(comb(j, i) for j in table.labels) for i in table.labels)
        out.append(_result(f"golden:pro-pascal:{m}", _int_rows(table.mat), pascal, "Pascal"))
        for kind, fn in (("simple", simple_table), ("projective", projective_table)):
            out.append(
                _result(
                    f"golden:pro-{kind}:{m}",
                    fn(Family.PLANAR_ROOK, m).mat,
                    table.mat,
                    "planar rook is semisimple",
                )
            )
    # printed inverse-transposes
    out.append(
        _result(
            "golden:tl7-linv",
            _int_rows(inverse(simple_table(Family.TEMPERLEY_LIEB, 7).mat.transpose())),
            reference.TL7_LINV,
            "reference.TL7_LINV",
        )
    )
    out.append(
        _result(
            "golden:mo5-simple-linv",
            _int_rows(inverse(simple_table(Family.MOTZKIN, 5).mat.transpose())),
            reference.MO5_SIMPLE_LINV,
            "reference.MO5_SIMPLE_LINV",
        )
    )
    out.append(
        _result(
            "golden:mo5-printed-linv-is-cell-inverse",
            _int_rows(inverse(cell_table(Family.MOTZKIN, 5).mat.transpose())),
            reference.MO5_CELL_LINV_PRINTED,
            "the printed matrix inverts the transposed cell table",
        )
    )
    # Riordan inverse identities up to m = 20 and the Motzkin closed form
    for family in (Family.PLANAR_ROOK, Family.TEMPERLEY_LIEB, Family.MOTZKIN):
        for m in range(1, 21):
            prod = cell_table(family, m).mat * cell_inverse(family, m).mat
            out.append(
                _result(
                    f"riordan:{family.value}:{m}",
                    prod,
                    Mat.identity(len(rank_labels(family, m))),
                    "cell_table * cell_inverse",
                )
            )
    for m in range(1, 9):
        try:
            check_motzkin_simple_closed_form(m)
            out.append(_result(f"motzkin-closed-form:{m}", True, True, "hump counts"))
        except Exception as exc:  # InternalCheckError
            out.append(CheckResult(f"motzkin-closed-form:{m}", "fail", str(exc), "", "hump counts"))
    return out


GOLDEN_SPECS = (
    (Family.TEMPERLEY_LIEB, 7, "V3"),
    (Family.TEMPERLEY_LIEB, 7, "S3"),
    (Family.MOTZKIN, 5, "S1"),
    (Family.MOTZKIN, 5, "V2"),
    (Family.PLANAR_ROOK, 5, "V1"),
    (Family.PLANAR_ROOK, 4, "V2"),
)


def check_growth(max_m: int | None = None) -> list[CheckResult]:
    out = []
    # golden closed forms
    spec = module_spec(Family.TEMPERLEY_LIEB, 7, "V3")
    series = length_series(spec, simple_table(Family.TEMPERLEY_LIEB, 7))
    out.append(
        _result(
            "formula:tl7-v3",
            tuple((int(c), b) for c, b in series.nonzero_base_terms()),
            reference.TL7_V3_LENGTH_TERMS,
            "length_series",
        )
    )
    spec = module_spec(Family.MOTZKIN, 5, "S1")
    series = length_series(spec, simple_table(Family.MOTZKIN, 5))
    out.append(
        _result(
            "formula:mo5-s1",
            tuple((int(c), b) for c, b in series.nonzero_base_terms()),
            reference.MO5_S1_LENGTH_TERMS,
            "length_series",
        )
    )
    # oracle agreement, n = 1..4, every target
    for family, m, sel in GOLDEN_SPECS:
        if max_m is not None and m > max_m:
            continue
        spec = module_spec(family, m, sel)
        table = simple_table(family, m)
        for n in range(1, 5):
            for target in table.labels:
                out.append(
                    _result(
                        f"mult:{family.value}:{m}:{sel}:n{n}:V{target}",
                        evaluate(multiplicity_series(spec, table, target), n),
                        oracle.oracle_multiplicity(spec, n, target),
                        "growth vs oracle",
                    )
                )
            out.append(
                _result(
                    f"length:{family.value}:{m}:{sel}:n{n}",
                    evaluate(length_series(spec, table), n),
                    oracle.oracle_length(spec, n),
                    "growth vs oracle",
                )
            )
    # planar rook tensor rule at m = 4, 5 against the oracle
    for m in (4, 5):
        if max_m is not None and m > max_m:
            continue
        for i in range(m + 1):
            for j in range(m + 1):
                spec_i = module_spec(Family.PLANAR_ROOK, m, f"V{i}")
                spec_j = module_spec(Family.PLANAR_ROOK, m, f"V{j}")
                for l in range(m + 1):
                    closed = comb(l, i) * comb(i, i + j - l) if 0 <= i + j - l <= i else 0
                    out.append(
                        _result(
                            f"tensor-rule:pro{m}:{i},{j}->{l}",
                            closed,
                            oracle.oracle_product_multiplicity(spec_i, spec_j, l),
                            "binomial product rule vs oracle",
                        )
                    )
    return out


def check_fusion(max_m: int | None = None) -> list[CheckResult]:
    out = []
    spec = module_spec(Family.PLANAR_ROOK, 8, "V2")
    table = simple_table(Family.PLANAR_ROOK, 8)
    graph = fusion_matrix(spec, table)
    out.append(
        _result("fusion:pro8-matrix", _int_rows(graph.adjacency), reference.PRO8_V2_FUSION, "reference")
    )
    out.append(
        _result("fusion:pro8-n0", realized_n0(graph, {8}), reference.PRO8_V2_N0, "shortest path")
    )
    report = scc_analysis(graph)
    out.append(_result("fusion:pro8-absorbing", report.absorbing, (8,), "scc"))
    out.append(
        _result(
            "fusion:pro8-selfloop",
            int(graph.adjacency.rows[graph.label_index(8)][graph.label_index(8)]),
            28,
            "absorbing self-loop = dim V",
        )
    )
    for family, m, sel in ((Family.TEMPERLEY_LIEB, 7, "V3"), (Family.MOTZKIN, 5, "S1"), (Family.PLANAR_ROOK, 8, "V2")):
        spec = module_spec(family, m, sel)
        table = simple_table(family, m)
        graph = fusion_matrix(spec, table)
        try:
            spectral_check(graph, spec, max_n=6)
            out.append(_result(f"spectral:{family.value}:{m}:{sel}", True, True, "projections"))
        except VerificationError as exc:
            out.append(CheckResult(f"spectral:{family.value}:{m}:{sel}", "fail", str(exc), "", "projections"))
        series = length_series(spec, table)
        for n in range(7):
            column = power_multiplicities(graph, n)
            out.append(
                _result(
                    f"fusion-length:{family.value}:{m}:{sel}:n{n}",
                    sum(column, Fraction(0)),
                    evaluate(series, n),
                    "column sums of A^n vs l(n)",
                )
            )
    return out


_SUITE_FNS = {
    "counts": check_counts,
    "tables": check_tables,
    "growth": check_growth,
    "fusion": check_fusion,
}


def run_suite(suite: str = "all", max_m: int | None = None) -> list[CheckResult]:
    if suite == "all":
        names = SUITES
    elif suite in _SUITE_FNS:
        names = (suite,)
    else:
        raise VerificationError(f"unknown suite {suite!r}")
    results: list[CheckResult] = []
    for name in names:
        results.extend(_SUITE_FNS[name](max_m))
    return results


def canonical_idempotent_texts(max_m: int | None = None):
    """(family, m, rank, text) for every canonical idempotent the suite uses."""
    out = []
    for family, bound in _oracle_bounds(max_m).items():
        for m in range(1, bound + 1):
            for j in rank_labels(family, m):
                out.append((family, m, j, str(class_idempotent(family, m, j))))
    return out


def report_json(results: list[CheckResult]) -> str:
    payload = {
        "checks": [
            {
                "name": r.check,
                "status": r.status,
                "detail": f"{r.lhs} vs {r.rhs} @ {r.location}",
                "lhs": r.lhs,
                "rhs": r.rhs,
                "location": r.location,
            }
            for r in results
        ],
        "failures": sum(1 for r in results if not r.ok),
        "total": len(results),
    }
    return json.dumps(payload, indent=2)
