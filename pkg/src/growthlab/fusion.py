"""Fusion graphs: tensor-by-V multiplication on the simple modules.

The adjacency matrix is oriented A[target][source] = [V tensor V_source :
V_target], so column j decomposes V tensor V_j and A^n applied to the
indicator of the trivial node lists the multiplicities in V^(x)n.  Graph
algorithms (shortest paths, strongly connected components) run on the support
digraph (positive entries); weights only matter for matrix arithmetic.

The spectral view: conjugating A by the transpose of the simple character
table diagonalizes it with the character values of V as eigenvalues, so the
Lagrange projections onto the distinct values reconstruct A^n exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, InternalCheckError, SingularMatrixError, VerificationError
from .growth import ModuleSpec
from .linalg import Mat, inverse, mat_mul, mat_pow
from .tables import CharTable


@dataclass(frozen=True)
class FusionGraph:
    family: object
    m: int
    labels: tuple[int, ...]
    dims: tuple[int, ...]
    adjacency: Mat  # A[target][source], nonnegative integers
    trivial_index: int

    def label_index(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError as exc:
            raise InputError(f"label {label} not in {self.labels}") from exc

    def support_edges(self) -> list[tuple[int, int]]:
        """(source index, target index) pairs with positive weight."""
        n = len(self.labels)
        return [
            (j, t)
            for j in range(n)
            for t in range(n)
            if self.adjacency.rows[t][j] > 0
        ]


def fusion_matrix(spec: ModuleSpec, simple: CharTable) -> FusionGraph:
    """Build the graph from a module's character and the simple table.

    Column j solves the triangular character system against the pointwise
    product of the module's character with row j of the simple table.
    """
    if spec.family is not simple.family or spec.m != simple.m:
        raise InputError("module and table belong to different monoids")
    n = len(simple.labels)
    for k in range(n):
        if simple.mat.rows[k][k] == 0:
            raise SingularMatrixError("simple table is singular")
    xt_inv = inverse(simple.mat.transpose())
    cols = []
    for j in range(n):
        pointwise = [spec.charvec[r] * simple.mat.rows[j][r] for r in range(n)]
        col = xt_inv.apply(pointwise)
        for value in col:
            if value.denominator != 1 or value < 0:
                raise InternalCheckError(
                    f"tensor multiplicity {value} is not a nonnegative integer"
                )
        cols.append(col)
    adjacency = Mat.from_cols(cols)
    dims = tuple(int(simple.mat.rows[k][-1]) for k in range(n))
    trivial_rows = [
        k for k in range(n) if all(v == 1 for v in simple.mat.rows[k])
    ]
    if len(trivial_rows) != 1:
        raise InternalCheckError("expected exactly one all-ones character row")
    return FusionGraph(
        family=spec.family,
        m=spec.m,
        labels=simple.labels,
        dims=dims,
        adjacency=adjacency,
        trivial_index=trivial_rows[0],
    )


def power_multiplicities(g: FusionGraph, n: int) -> tuple[Fraction, ...]:
    """(A^n) applied to the trivial indicator: the decomposition of V^(x)n."""
    if n < 0:
        raise InputError("need n >= 0")
    an = mat_pow(g.adjacency, n)
    return an.col(g.trivial_index)


def realized_n0(g: FusionGraph, targets) -> int | None:
    """Length of the shortest directed path from the trivial node into targets.

    Breadth-first over positive-weight edges; None when unreachable.
    """
    target_idx = {g.label_index(t) for t in targets}
    start = g.trivial_index
    if start in target_idx:
        return 0
    n = len(g.labels)
    out: list[list[int]] = [[] for _ in range(n)]
    for j, t in g.support_edges():
        out[j].append(t)
    seen = {start}
    frontier = [start]
    steps = 0
    while frontier:
        steps += 1
        nxt = []
        for j in frontier:
            for t in out[j]:
                if t in target_idx:
                    return steps
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return None


@dataclass(frozen=True)
class SccReport:
    components: tuple[tuple[int, ...], ...]  # label tuples, sorted by least label
    absorbing: tuple[int, ...]  # labels in absorbing components


def scc_analysis(g: FusionGraph) -> SccReport:
    """Strongly connected components of the support digraph.

    A component is absorbing when no edge leaves it and it is reachable from
    every node.
    """
    n = len(g.labels)
    out: list[list[int]] = [[] for _ in range(n)]
    for j, t in g.support_edges():
        out[j].append(t)

    # Tarjan, iterative
    index_of = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    comp_of = [-1] * n
    comps: list[list[int]] = []

    for root in range(n):
        if index_of[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index_of[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while pi < len(out[v]):
                w = out[v][pi]
                pi += 1
                if index_of[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index_of[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index_of[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp_of[w] = len(comps)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])

    n_comps = len(comps)
    leaves = [False] * n_comps  # has an edge to another component
    for j, t in g.support_edges():
        if comp_of[j] != comp_of[t]:
            leaves[comp_of[j]] = True

    # reachable component sets per node, by fixpoint (graphs here are tiny)
    reach: list[set[int]] = [set() for _ in range(n)]
    for v in range(n):
        reach[v].add(comp_of[v])
    changed = True
    while changed:
        changed = False
        for j, t in g.support_edges():
            before = len(reach[j])
            reach[j] |= reach[t]
            if len(reach[j]) != before:
                changed = True

    absorbing_comps = [
        c
        for c in range(n_comps)
        if not leaves[c] and all(c in reach[v] for v in range(n))
    ]
    label_comps = tuple(
        sorted(
            (tuple(sorted(g.labels[v] for v in comp)) for comp in comps),
            key=lambda t: t[0],
        )
    )
    absorbing = tuple(
        sorted(g.labels[v] for c in absorbing_comps for v in comps[c])
    )
    return SccReport(label_comps, absorbing)


def spectral_check(g: FusionGraph, spec: ModuleSpec, max_n: int = 6) -> dict:
    """Verify the projection decomposition of A exactly.

    Classes are grouped by equal character value; P_val is the Lagrange
    interpolation product over the distinct values.  Checks: the projections
    sum to the identity, square to themselves, and reconstruct A^n for
    n <= max_n.  Raises VerificationError on any mismatch.
    """
    if tuple(spec.charvec) == ():
        raise InputError("empty character vector")
    a = g.adjacency
    n = len(g.labels)
    distinct: list[Fraction] = []
    for v in spec.charvec:
        if v not in distinct:
            distinct.append(v)
    ident = Mat.identity(n)
    projections: dict[Fraction, Mat] = {}
    for lam in distinct:
        p = ident
        for mu in distinct:
            if mu == lam:
                continue
            p = mat_mul(p, (a - ident.scale(mu)).scale(Fraction(1) / (lam - mu)))
        projections[lam] = p
    checks = []

    total = Mat.zero(n, n)
    for p in projections.values():
        total = total + p
    checks.append(("sum_of_projections_is_identity", total == ident))

    idem_ok = all(mat_mul(p, p) == p for p in projections.values())
    checks.append(("projections_are_idempotent", idem_ok))

    for power in range(0, max_n + 1):
        recon = Mat.zero(n, n)
        for lam, p in projections.items():
            recon = recon + p.scale(lam**power)
        checks.append((f"reconstructs_power_{power}", recon == mat_pow(a, power)))

    failures = [name for name, ok in checks if not ok]
    if failures:
        raise VerificationError(f"spectral reconstruction failed: {failures}")
    return {
        "eigenvalues": [str(v) for v in distinct],
        "checks": [name for name, _ in checks],
        "ok": True,
    }


def to_dot(g: FusionGraph) -> str:
    """DOT text; nodes in label order, absorbing component double-circled."""
    absorbing = set(scc_analysis(g).absorbing)
    lines = ["digraph fusion {"]
    for k, label in enumerate(g.labels):
        attrs = [f'label="V_{label} ({g.dims[k]})"']
        if label in absorbing:
            attrs.append("peripheries=2")
        lines.append(f"  v{label} [{', '.join(attrs)}];")
    for j, t in g.support_edges():
        weight = int(g.adjacency.rows[t][j])
        lines.append(f'  v{g.labels[j]} -> v{g.labels[t]} [label="{weight}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: FusionGraph) -> str:
    report = scc_analysis(g)
    payload = {
        "labels": list(g.labels),
        "dims": list(g.dims),
        "adjacency": [[int(x) for x in row] for row in g.adjacency.rows],
        "trivial_index": g.trivial_index,
        "absorbing": list(report.absorbing),
    }
    return json.dumps(payload, indent=2)
