"""Formula-free verification: cell modules on half-diagram bases.

Everything here recomputes representation data directly from diagrams so the
closed forms elsewhere have an independent referee:

* half diagrams — planar partial matchings on m points with i unmatched
  "defect" points (defects may not sit under a cup) — are the basis of the
  cell module S_i;
* a monoid element acts by gluing onto the defect edge and reading off the
  other side; if any defect is capped, killed or merged the result is zero,
  and closed loops / dead points contribute a factor 1;
* the cellular bilinear form pairs two half diagrams by gluing them face to
  face: the value is 1 when every defect propagates straight through, else 0;
* the simple module is the quotient of S_i by the radical of that form, and
  its character is the trace of the induced action;
* tensor-power multiplicities come from solving the triangular system of the
  brute-force character table (plus, for small n, an explicit Kronecker-power
  trace check).

Cell modules are cached per (family, m, i).  Action matrices are memoized per
diagram; recomputation is idempotent (pure functions of immutable inputs), so
concurrent queries are safe — a race can at worst duplicate work.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .diagrams import (
    Diagram,
    Family,
    class_idempotent,
    expected_order,
    enumerate_diagrams,
    rank_labels,
)
from .errors import InputError, InternalCheckError, VerificationError
from .growth import ModuleSpec, module_spec
from .linalg import Mat, inverse, kernel_and_rank, mat_mul, solve_lower_triangular


# ---------------------------------------------------------------------------
# half diagrams

@dataclass(frozen=True)
class HalfDiagram:
    """A planar partial matching on m points with i upward defect strands.

    cups are disjoint sorted pairs, defects the unmatched points that carry a
    strand; everything else is isolated (only planar rook and Motzkin allow
    isolated points, and only Motzkin allows cups and isolated together).
    """

    family: Family
    m: int
    cups: tuple[tuple[int, int], ...]
    defects: tuple[int, ...]

    @property
    def n_defects(self) -> int:
        return len(self.defects)

    def isolated(self) -> tuple[int, ...]:
        used = {p for cup in self.cups for p in cup} | set(self.defects)
        return tuple(p for p in range(1, self.m + 1) if p not in used)


def _half_states(points: tuple[int, ...], allow_defects: bool, family: Family):
    """All planar states on a run of points, in generation order.

    Yields (cups, defects); points not mentioned are isolated.  Inside a cup
    no defect may appear (it could not escape upward), which is exactly the
    planarity constraint for half diagrams on a line.
    """
    if not points:
        yield ((), ())
        return
    p, rest = points[0], points[1:]
    if allow_defects:
        for cups, defects in _half_states(rest, allow_defects, family):
            yield cups, (p,) + defects
    if family is not Family.TEMPERLEY_LIEB:
        # p isolated
        yield from _half_states(rest, allow_defects, family)
    if family is not Family.PLANAR_ROOK:
        for idx in range(len(rest)):
            if family is Family.TEMPERLEY_LIEB and idx % 2 == 1:
                continue
            q = rest[idx]
            for in_cups, _ in _half_states(rest[:idx], False, family):
                for out_cups, out_defects in _half_states(rest[idx + 1:], allow_defects, family):
                    yield ((p, q),) + in_cups + out_cups, out_defects


def half_diagrams(family: Family, m: int, i: int) -> tuple[HalfDiagram, ...]:
    """The basis of the cell module S_i, sorted lexicographically on (cups, defects)."""
    if i not in rank_labels(family, m):
        raise InputError(f"defect count {i} not in {rank_labels(family, m)}")
    states = [
        HalfDiagram(family, m, tuple(sorted(cups)), defects)
        for cups, defects in _half_states(tuple(range(1, m + 1)), True, family)
        if len(defects) == i
    ]
    states.sort(key=lambda h: (h.cups, h.defects))
    return tuple(states)


# ---------------------------------------------------------------------------
# the cell action

def _apply_diagram(d: Diagram, x: HalfDiagram) -> HalfDiagram | None:
    """Glue x under d (x's points on d's bottom row); None when a defect dies."""
    m = d.m
    # slots 0..m-1: d's top row; m..2m-1: the glued middle row
    parent = list(range(2 * m))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for b in d.blocks:
        if len(b) == 2:
            p, q = b
            union(p - 1 if p <= m else m + (p - m - 1), q - 1 if q <= m else m + (q - m - 1))
    for a, b in x.cups:
        union(m + a - 1, m + b - 1)

    groups: dict[int, list[int]] = {}
    for slot in range(2 * m):
        groups.setdefault(find(slot), []).append(slot)
    defect_roots = {find(m + v - 1) for v in x.defects}
    if len(defect_roots) != x.n_defects:
        return None  # two defects merged

    new_defects = []
    new_cups = []
    for root, members in groups.items():
        tops = [s + 1 for s in members if s < m]
        if root in defect_roots:
            if len(tops) != 1:
                return None  # the defect died inside
            new_defects.append(tops[0])
        elif len(tops) == 2:
            new_cups.append((tops[0], tops[1]))
        # len(tops) == 1 -> isolated result point; 0 -> loop or dead middle, factor 1
    return HalfDiagram(
        x.family, m, tuple(sorted(new_cups)), tuple(sorted(new_defects))
    )


class CellModule:
    """Cell module S_i for (family, m): basis plus a per-diagram action cache."""

    def __init__(self, family: Family, m: int, i: int):
        self.family = family
        self.m = m
        self.i = i
        self.basis = half_diagrams(family, m, i)
        self.index = {h: k for k, h in enumerate(self.basis)}
        self._action_cache: dict[Diagram, Mat] = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def action(self, d: Diagram) -> Mat:
        if d.family is not self.family or d.m != self.m:
            raise InputError("diagram does not act on this module")
        cached = self._action_cache.get(d)
        if cached is not None:
            return cached
        n = self.dim
        rows = [[Fraction(0)] * n for _ in range(n)]
        for col, x in enumerate(self.basis):
            image = _apply_diagram(d, x)
            if image is None:
                continue
            try:
                rows[self.index[image]][col] = Fraction(1)
            except KeyError as exc:
                raise InternalCheckError(
                    f"action left the half-diagram basis: {image}"
                ) from exc
        mat = Mat(rows)
        self._action_cache[d] = mat
        return mat


@lru_cache(maxsize=None)
def cell_module(family: Family, m: int, i: int) -> CellModule:
    return CellModule(family, m, i)


def cell_action(d: Diagram, module: CellModule) -> Mat:
    return module.action(d)


def cell_character(family: Family, m: int, i: int, j: int) -> Fraction:
    """Trace of the canonical rank-j idempotent on S_i (a fixed-point count)."""
    module = cell_module(family, m, i)
    return module.action(class_idempotent(family, m, j)).trace()


# ---------------------------------------------------------------------------
# the cellular form and simple characters

def _pairing(x: HalfDiagram, y: HalfDiagram) -> int:
    """Glue x (flipped) on top of y: 1 iff every defect propagates through.

    Components of the union of the two cup sets are paths or cycles; cycles
    close into loops (factor 1, the monoid convention); a path is good when
    it joins one x-defect to one y-defect, and fatal when a defect meets a
    defect on its own side or a dead end.
    """
    m = x.m
    parent = list(range(m))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in x.cups + y.cups:
        ra, rb = find(a - 1), find(b - 1)
        if ra != rb:
            parent[ra] = rb

    x_def: dict[int, int] = {}
    y_def: dict[int, int] = {}
    for v in x.defects:
        r = find(v - 1)
        x_def[r] = x_def.get(r, 0) + 1
    for v in y.defects:
        r = find(v - 1)
        y_def[r] = y_def.get(r, 0) + 1
    for root in set(x_def) | set(y_def):
        if (x_def.get(root, 0), y_def.get(root, 0)) != (1, 1):
            return 0
    return 1


def gram_matrix(family: Family, m: int, i: int) -> Mat:
    """The cellular bilinear form on the half-diagram basis of S_i."""
    basis = half_diagrams(family, m, i)
    return Mat([[_pairing(x, y) for y in basis] for x in basis])


@lru_cache(maxsize=None)
def _radical_data(family: Family, m: int, i: int):
    """(kernel basis as columns Mat or None, quotient dimension)."""
    gram = gram_matrix(family, m, i)
    rank, kernel = kernel_and_rank(gram)
    if not kernel:
        return None, gram.nrows
    return Mat.from_cols(kernel), rank


def simple_character(family: Family, m: int, i: int, j: int) -> Fraction:
    """Trace of the rank-j idempotent on the simple quotient S_i / rad.

    The radical is the kernel of the cellular form; the action must preserve
    it (cellularity), which is verified, and the quotient trace is the full
    trace minus the trace on the radical.
    """
    module = cell_module(family, m, i)
    action = module.action(class_idempotent(family, m, j))
    kernel_cols, _ = _radical_data(family, m, i)
    if kernel_cols is None:
        return action.trace()
    mk = mat_mul(action, kernel_cols)
    # A = (K^T K)^-1 K^T (M K) solves K A = M K when the radical is invariant
    kt = kernel_cols.transpose()
    gramian = mat_mul(kt, kernel_cols)
    sub_action = mat_mul(inverse(gramian), mat_mul(kt, mk))
    if mat_mul(kernel_cols, sub_action) != mk:
        raise InternalCheckError(
            f"radical of S_{i} not stable under the rank-{j} idempotent"
        )
    return action.trace() - sub_action.trace()


def simple_dimension(family: Family, m: int, i: int) -> int:
    """Rank of the cellular form = dimension of the simple module V_i."""
    return _radical_data(family, m, i)[1]


@lru_cache(maxsize=None)
def oracle_cell_table(family: Family, m: int) -> Mat:
    labels = rank_labels(family, m)
    return Mat([[cell_character(family, m, i, j) for j in labels] for i in labels])


@lru_cache(maxsize=None)
def oracle_simple_table(family: Family, m: int) -> Mat:
    labels = rank_labels(family, m)
    return Mat([[simple_character(family, m, i, j) for j in labels] for i in labels])


# ---------------------------------------------------------------------------
# explicit module matrices (for the Kronecker cross-check)

def _quotient_action(family: Family, m: int, i: int, d: Diagram) -> Mat:
    """The action of d on S_i / rad in an explicit complement basis."""
    module = cell_module(family, m, i)
    action = module.action(d)
    kernel_cols, _ = _radical_data(family, m, i)
    if kernel_cols is None:
        return action
    n = module.dim
    # Each kernel basis vector carries a 1 in its free coordinate, which is
    # its last nonzero entry; dropping those coordinates leaves a complement.
    free_rows = []
    for col in range(kernel_cols.ncols):
        col_vals = kernel_cols.col(col)
        free_rows.append(max(r for r in range(n) if col_vals[r] != 0))
    keep = [r for r in range(n) if r not in free_rows]
    basis_cols = [
        tuple(Fraction(int(r == k)) for r in range(n)) for k in keep
    ] + [kernel_cols.col(c) for c in range(kernel_cols.ncols)]
    change = Mat.from_cols(basis_cols)
    conjugated = mat_mul(inverse(change), mat_mul(action, change))
    q = len(keep)
    return Mat([row[:q] for row in conjugated.rows[:q]])


def _module_action(spec: ModuleSpec, d: Diagram) -> Mat:
    kind, label = spec.label[0], int(spec.label[1:])
    if kind == "S":
        return cell_module(spec.family, spec.m, label).action(d)
    if kind == "V":
        return _quotient_action(spec.family, spec.m, label, d)
    raise InputError(f"no explicit matrices for module {spec.label!r}")


def _sparse(a: Mat) -> tuple[int, dict[tuple[int, int], Fraction]]:
    entries = {
        (r, c): a.rows[r][c]
        for r in range(a.nrows)
        for c in range(a.ncols)
        if a.rows[r][c] != 0
    }
    return a.nrows, entries


def _kron_sparse(a, b):
    """Kronecker product on (size, nonzero dict) pairs; actions are very sparse."""
    da, ea = a
    db, eb = b
    out = {}
    for (r1, c1), v1 in ea.items():
        for (r2, c2), v2 in eb.items():
            out[(r1 * db + r2, c1 * db + c2)] = v1 * v2
    return da * db, out


@lru_cache(maxsize=None)
def _kronecker_check_cached(family: Family, m: int, label: str, n: int) -> None:
    spec = module_spec(family, m, label)
    labels = rank_labels(family, m)
    for j, chi in zip(labels, spec.charvec):
        action = _sparse(_module_action(spec, class_idempotent(family, m, j)))
        power = action
        for _ in range(n - 1):
            power = _kron_sparse(power, action)
        trace = sum((v for (r, c), v in power[1].items() if r == c), Fraction(0))
        if trace != chi**n:
            raise VerificationError(
                f"Kronecker trace at class {j} disagrees with chi^{n} for {label}"
            )


def _kronecker_check(spec: ModuleSpec, n: int) -> None:
    """Explicitly verify chi(e_j)^n as the trace of the n-fold Kronecker power.

    Cached per (module, n): the matrices can be large (dim^2) and the check
    is deterministic.
    """
    _kronecker_check_cached(spec.family, spec.m, spec.label, n)


# ---------------------------------------------------------------------------
# multiplicities and counting

def _solve_multiplicities(
    family: Family, m: int, rhs: list[Fraction]
) -> tuple[Fraction, ...]:
    table = oracle_simple_table(family, m)
    return solve_lower_triangular(table.transpose(), rhs)


def oracle_multiplicity(spec: ModuleSpec, n: int, target: int) -> int:
    """[V^(x)n : V_target] from brute-force character data only.

    Solves the transposed brute-force simple table against the pointwise
    n-th powers of the character; for n <= 2 (and explicit cell or simple
    modules) additionally verifies the character powers against traces of
    literal Kronecker powers of the idempotent actions.
    """
    if n < 0:
        raise InputError("need n >= 0")
    labels = rank_labels(spec.family, spec.m)
    if target not in labels:
        raise InputError(f"target {target} not in {labels}")
    if spec.family not in (Family.PLANAR_ROOK, Family.TEMPERLEY_LIEB, Family.MOTZKIN):
        raise InputError(f"no oracle for {spec.family.value}")
    rhs = [chi**n for chi in spec.charvec]
    sol = _solve_multiplicities(spec.family, spec.m, rhs)
    value = sol[labels.index(target)]
    if value.denominator != 1 or value < 0:
        raise VerificationError(
            f"multiplicity {value} is not a nonnegative integer; inconsistent inputs"
        )
    if 1 <= n <= 2 and spec.label[0] in "SV":
        _kronecker_check(spec, n)
    return int(value)


def oracle_length(spec: ModuleSpec, n: int) -> int:
    """l(n) as the sum of all oracle multiplicities."""
    labels = rank_labels(spec.family, spec.m)
    rhs = [chi**n for chi in spec.charvec]
    sol = _solve_multiplicities(spec.family, spec.m, rhs)
    total = sum(sol, Fraction(0))
    if total.denominator != 1:
        raise VerificationError(f"length {total} is not an integer")
    return int(total)


def oracle_product_multiplicity(
    spec_a: ModuleSpec, spec_b: ModuleSpec, target: int
) -> int:
    """[V_a tensor V_b : V_target] by solving against pointwise products."""
    if spec_a.family is not spec_b.family or spec_a.m != spec_b.m:
        raise InputError("modules belong to different monoids")
    labels = rank_labels(spec_a.family, spec_a.m)
    rhs = [a * b for a, b in zip(spec_a.charvec, spec_b.charvec)]
    sol = _solve_multiplicities(spec_a.family, spec_a.m, rhs)
    value = sol[labels.index(target)]
    if value.denominator != 1 or value < 0:
        raise VerificationError(f"tensor multiplicity {value} is not a nonnegative integer")
    return int(value)


@dataclass(frozen=True)
class CountCheck:
    actual: int
    expected: int


def count_check(family: Family, m: int) -> CountCheck:
    """Enumerated monoid order against the independent counting sequence."""
    actual = len(enumerate_diagrams(family, m))
    expected = expected_order(family, m)
    if actual != expected:
        raise VerificationError(
            f"|{family.value}_{m}| = {actual}, expected {expected}"
        )
    return CountCheck(actual, expected)
