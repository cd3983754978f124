"""Exact growth formulas for tensor powers.

Everything a growth statistic evaluates to here is an exponential sum
sum_t c_t * b_t^n with rational coefficients and integer bases — the
composition length l(n) of the n-th tensor power, the multiplicity of a fixed
simple in it, the dominating part k(n), and the summand asymptotics a(n).

For a module V with character chi over the rank classes, the multiplicity of
the simple with label t in V^(x)n is the t-th row of the inverse transpose of
the simple character table dotted against (chi(j)^n)_j; summing rows gives
l(n), whose coefficients are therefore the column sums of that inverse
transpose.  Bases with value 0 are kept: under the convention 0^0 = 1 they
make every length formula return 1 at n = 0 (the trivial module), while for
n >= 1 they vanish — printed formulas usually show only the n >= 1 part, and
the human rendering follows suit.

Only rational character data is supported; irrational values are rejected at
input validation.  All values are immutable and all functions pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .diagrams import Family, PLANAR_FAMILIES
from .errors import InputError, InternalCheckError, SingularMatrixError
from .linalg import Mat, inverse, mat_mul, solve_upper_triangular
from .tables import CharTable, cell_table, projective_table, simple_table, _is_prime


def _as_int_base(x: Fraction) -> int:
    if x.denominator != 1:
        raise InputError(f"character value {x} is not an integer; cannot form a growth base")
    return int(x)


@dataclass(frozen=True)
class ExpSum:
    """A finite exponential sum n |-> sum c * base^n, in canonical form.

    Bases are distinct, sorted by descending absolute value (ties broken by
    descending base); zero coefficients are dropped.
    """

    terms: tuple[tuple[Fraction, int], ...]

    @staticmethod
    def make(pairs) -> "ExpSum":
        merged: dict[int, Fraction] = {}
        for coeff, base in pairs:
            coeff = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
            merged[base] = merged.get(base, Fraction(0)) + coeff
        terms = [(c, b) for b, c in merged.items() if c != 0]
        terms.sort(key=lambda t: (-abs(t[1]), -t[1]))
        return ExpSum(tuple(terms))

    def evaluate(self, n: int) -> Fraction:
        """Value at n >= 0, with 0^0 = 1."""
        if n < 0:
            raise InputError("exponential sums are evaluated at n >= 0")
        return sum((c * base**n for c, base in self.terms), Fraction(0))

    def leading_term(self) -> "ExpSum":
        """The sub-sum of terms with maximal |base| — the asymptotic part."""
        if not self.terms:
            raise InputError("leading term of an empty sum")
        top = abs(self.terms[0][1])
        return ExpSum(tuple(t for t in self.terms if abs(t[1]) == top))

    def nonzero_base_terms(self) -> tuple[tuple[Fraction, int], ...]:
        return tuple(t for t in self.terms if t[1] != 0)

    def human(self) -> str:
        """Rendering like "13^n - 5*4^n + 8".

        Base-0 terms (invisible for n >= 1) are omitted unless they are all
        there is, so the string matches the usual printed n >= 1 form.
        """
        terms = self.nonzero_base_terms() or self.terms
        if not terms:
            return "0"
        parts: list[str] = []
        for coeff, base in terms:
            if base == 1:
                body = str(abs(coeff))
            else:
                mag = abs(coeff)
                body = f"{base}^n" if mag == 1 else f"{mag}*{base}^n"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def to_json(self) -> list[dict[str, object]]:
        return [{"coeff": str(c), "base": b} for c, b in self.terms]


def evaluate(es: ExpSum, n: int) -> Fraction:
    return es.evaluate(n)


def leading_term(es: ExpSum) -> ExpSum:
    return es.leading_term()


# ---------------------------------------------------------------------------
# module descriptors

_SELECTOR = re.compile(r"^([VvSsPp])(\d+)$")


@dataclass(frozen=True)
class ModuleSpec:
    """A virtual module: label, dimension, and character over the rank classes."""

    label: str
    family: Family
    m: int
    dim: int
    charvec: tuple[Fraction, ...]

    def __post_init__(self):
        if self.dim != self.charvec[-1]:
            raise InputError("dimension must equal the character at the identity class")

    @staticmethod
    def from_table(table: CharTable, label: int, prefix: str) -> "ModuleSpec":
        row = table.row(label)
        return ModuleSpec(
            label=f"{prefix}{label}",
            family=table.family,
            m=table.m,
            dim=int(row[-1]),
            charvec=tuple(row),
        )


def module_spec(family: Family, m: int, selector: str) -> ModuleSpec:
    """Resolve a selector like "V3" (simple), "S1" (cell) or "P2" (projective)."""
    match = _SELECTOR.match(selector.strip())
    if not match:
        raise InputError(f"bad module selector {selector!r} (want V<i>, S<i> or P<i>)")
    kind, label = match.group(1).upper(), int(match.group(2))
    table = {
        "V": simple_table,
        "S": cell_table,
        "P": projective_table,
    }[kind](family, m)
    if label not in table.labels:
        raise InputError(f"label {label} not in {table.labels}")
    return ModuleSpec.from_table(table, label, kind)


def _check_compatible(spec: ModuleSpec, simple: CharTable) -> None:
    if spec.family is not simple.family or spec.m != simple.m:
        raise InputError("module and table belong to different monoids")
    if len(spec.charvec) != len(simple.labels):
        raise InputError("character vector length mismatch")
    for k, label in enumerate(simple.labels):
        if simple.mat.rows[k][k] == 0:
            raise SingularMatrixError(f"simple table has zero diagonal at {label}")


def multiplicity_series(spec: ModuleSpec, simple: CharTable, target: int) -> ExpSum:
    """[V^(x)n : V_target] as an exponential sum in n."""
    _check_compatible(spec, simple)
    idx = simple.index(target)
    unit = [Fraction(int(k == idx)) for k in range(len(simple.labels))]
    # column `target` of X^-1 = row `target` of the inverse transpose
    coeffs = solve_upper_triangular(simple.mat, unit)
    return ExpSum.make(
        (c, _as_int_base(chi)) for c, chi in zip(coeffs, spec.charvec)
    )


def length_series(spec: ModuleSpec, simple: CharTable) -> ExpSum:
    """l(n) = total number of composition factors of V^(x)n."""
    _check_compatible(spec, simple)
    ones = [Fraction(1)] * len(simple.labels)
    coeffs = solve_upper_triangular(simple.mat, ones)
    return ExpSum.make(
        (c, _as_int_base(chi)) for c, chi in zip(coeffs, spec.charvec)
    )


# ---------------------------------------------------------------------------
# the general (arbitrary monoid) formula

@dataclass(frozen=True)
class MonoidClassData:
    """Rational class data of a finite monoid.

    Per regular J-class i: the order of its maximal subgroup and the sizes of
    its (p-regular) conjugacy classes.  l_matrix is the decomposition matrix L
    of the restriction map, with rows and columns indexed by the simples
    (i, j) in flat order; y_blocks are the projective character tables of the
    maximal subgroups (block diagonal of Y), one square block per J-class.
    """

    group_orders: tuple[int, ...]
    class_sizes: tuple[tuple[int, ...], ...]
    l_matrix: Mat
    y_blocks: tuple[Mat, ...]

    def __post_init__(self):
        if len(self.group_orders) != len(self.class_sizes) or len(
            self.group_orders
        ) != len(self.y_blocks):
            raise InputError("per-J-class data lengths disagree")
        for sizes, block in zip(self.class_sizes, self.y_blocks):
            if not block.is_square() or block.nrows != len(sizes):
                raise InputError("Y block shape must match the class count")
        n = sum(len(sizes) for sizes in self.class_sizes)
        if self.l_matrix.shape != (n, n):
            raise InputError("L must be square of size = total class count")

    @property
    def total_classes(self) -> int:
        return sum(len(sizes) for sizes in self.class_sizes)

    def y_matrix(self) -> Mat:
        n = self.total_classes
        rows = [[Fraction(0)] * n for _ in range(n)]
        offset = 0
        for block in self.y_blocks:
            for a in range(block.nrows):
                for b in range(block.ncols):
                    rows[offset + a][offset + b] = block.rows[a][b]
            offset += block.nrows
        return Mat(rows)

    @staticmethod
    def trivial_groups(simple: CharTable) -> "MonoidClassData":
        """Data of a monoid whose maximal subgroups are all trivial (L = X^T)."""
        n = len(simple.labels)
        return MonoidClassData(
            group_orders=(1,) * n,
            class_sizes=((1,),) * n,
            l_matrix=simple.mat.transpose(),
            y_blocks=(Mat.identity(1),) * n,
        )


def general_length_series(data: MonoidClassData, charvec) -> ExpSum:
    """l(n) from arbitrary rational class data.

    l(n) = sum_i (1/|G_i|) sum_j |C_{i,j}| T_{i,j} chi(g_{i,j})^n where
    T_{i,j} sums the entries of L^-1 applied to the (i,j) column of Y
    (conjugation is the identity on rational data).
    """
    charvec = tuple(Fraction(x) for x in charvec)
    if len(charvec) != data.total_classes:
        raise InputError("character vector length mismatch")
    linv_y = mat_mul(inverse(data.l_matrix), data.y_matrix())
    col_sums = [
        sum((linv_y.rows[r][c] for r in range(linv_y.nrows)), Fraction(0))
        for c in range(linv_y.ncols)
    ]
    terms = []
    flat = 0
    for order, sizes in zip(data.group_orders, data.class_sizes):
        for size in sizes:
            coeff = Fraction(size, order) * col_sums[flat]
            terms.append((coeff, _as_int_base(charvec[flat])))
            flat += 1
    return ExpSum.make(terms)


@dataclass(frozen=True)
class GroupClassData:
    """Rational class data of a group of units: sizes, tables, scalar classes.

    scalar_classes lists the indices of the classes acting on V by a scalar,
    with the scalars themselves in the matching order; such classes are
    central, hence singletons.
    """

    class_sizes: tuple[int, ...]
    simple_table: Mat
    projective_table: Mat
    scalar_classes: tuple[int, ...]
    scalars: tuple[Fraction, ...]

    def __post_init__(self):
        n = len(self.class_sizes)
        if self.simple_table.ncols != n or self.projective_table.ncols != n:
            raise InputError("table widths must match the class count")
        if len(self.scalar_classes) != len(self.scalars):
            raise InputError("one scalar per scalar class")
        for t in self.scalar_classes:
            if self.class_sizes[t] != 1:
                raise InputError("scalar-acting classes must be central (size 1)")

    @property
    def group_order(self) -> int:
        return sum(self.class_sizes)

    def _asymptotic(self, table: Mat, dim: int) -> ExpSum:
        terms = []
        for t, omega in zip(self.scalar_classes, self.scalars):
            col_sum = sum((table.rows[r][t] for r in range(table.nrows)), Fraction(0))
            base = _as_int_base(Fraction(omega) * dim)
            terms.append((col_sum / self.group_order, base))
        return ExpSum.make(terms)

    def length_asymptotic(self, dim: int) -> ExpSum:
        """k(n): projective column sums over scalar classes, scaled by dim^n."""
        return self._asymptotic(self.projective_table, dim)

    def summand_asymptotic(self, dim: int) -> ExpSum:
        """a(n): simple column sums over scalar classes, scaled by dim^n."""
        return self._asymptotic(self.simple_table, dim)


# ---------------------------------------------------------------------------
# convergence data and constants

@dataclass(frozen=True)
class ConvergenceReport:
    chi_sec: Fraction
    ratio: Fraction


def convergence_report(spec: ModuleSpec) -> ConvergenceReport:
    """Second-largest |character value| and its ratio to the dimension.

    A constant character means every element acts as a scalar; then chi_sec
    is 0 by convention.
    """
    values = {abs(x) for x in spec.charvec}
    top = max(values)
    rest = {v for v in values if v < top}
    chi_sec = max(rest) if rest else Fraction(0)
    ratio = chi_sec / spec.dim if spec.dim else Fraction(0)
    return ConvergenceReport(chi_sec, ratio)


def involution_sum(m: int) -> tuple[Fraction, int]:
    """(sum_z 1/((m-2z)! z! 2^z), m! times it) — the involution count I(m)."""
    if m < 1:
        raise InputError("need m >= 1")
    total = sum(
        Fraction(1, factorial(m - 2 * z) * factorial(z) * 2**z)
        for z in range(m // 2 + 1)
    )
    dims_total = total * factorial(m)
    assert dims_total.denominator == 1
    # independent cross-check: I(m) = I(m-1) + (m-1) I(m-2)
    prev2, prev1 = 1, 1
    for k in range(2, m + 1):
        prev2, prev1 = prev1, prev1 + (k - 1) * prev2
    if int(dims_total) != prev1:
        raise InternalCheckError(f"involution sum disagrees with the recurrence at m={m}")
    return total, int(dims_total)


def an_constant(family: Family, m: int) -> Fraction:
    """The constant c with a(n) = c * (dim V)^n over the complex numbers.

    1 for the planar families (trivial group of units); the involution sum
    for the families whose group of units is the symmetric group.
    """
    if not isinstance(family, Family):
        raise InputError(f"unknown family {family!r}")
    if m < 1:
        raise InputError("need m >= 1")
    if family in PLANAR_FAMILIES:
        return Fraction(1)
    return involution_sum(m)[0]


def idempotent_multiplicity(idem, charvalues, n: int) -> Fraction:
    """Multiplicity of the module cut out by an idempotent sum_m c_m m.

    idem is a list of (coefficient, label) pairs (labels may aggregate whole
    classes with their sizes folded into the coefficients); charvalues maps
    labels to character values.
    """
    if n < 0:
        raise InputError("tensor powers need n >= 0")
    total = Fraction(0)
    for coeff, label in idem:
        if label not in charvalues:
            raise InputError(f"no character value for label {label!r}")
        total += Fraction(coeff) * Fraction(charvalues[label]) ** n
    return total


def n0_upper_bound(l_class_count: int, semigroup: bool = False) -> int:
    """Steps needed before a unit-group module appears: L-1 (monoid) or L."""
    if l_class_count < 1:
        raise InputError("need at least one L-class")
    return l_class_count if semigroup else l_class_count - 1


def m0_upper_bound(l_class_count: int, group_order: int, scalar_subgroup_order: int) -> int:
    """Bound L + |G|/|Z| + |Z| - 3 for the first projective-induced summand."""
    if l_class_count < 1 or group_order < 1 or scalar_subgroup_order < 1:
        raise InputError("counts must be positive")
    if group_order % scalar_subgroup_order:
        raise InputError("scalar subgroup order must divide the group order")
    return l_class_count + group_order // scalar_subgroup_order + scalar_subgroup_order - 3


def linear_monoid_constant(p: int, r: int) -> Fraction:
    """The k(n)/dim^n constant for 2x2 matrix monoids over F_q, q = p^r."""
    if not _is_prime(p):
        raise InputError(f"{p} is not prime")
    if r < 1:
        raise InputError("need r >= 1")
    q = p**r
    return Fraction(2 * r - 1 + (2 * p - 1) ** r - 2**r, q * q - 1)
