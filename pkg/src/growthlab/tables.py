"""Closed-form character tables for the planar families and their combinatorics.

Rank classes are indexed by the labels Lambda_m (ascending; for Temperley-Lieb
they share the parity of m), which makes every cell/simple table upper
triangular with unit diagonal.  Entries:

* planar rook: cell(i, j) = C(j, i) — Pascal's triangle — and the monoid is
  semisimple, so cell = simple = projective;
* Temperley-Lieb: cell(i, j) = alpha(j, i), the ballot-number triangle whose
  rows are convolutions of the Catalan numbers;
* Motzkin: cell(i, j) = beta(j, i), rows are convolutions of the Motzkin
  numbers.

Each triangle is a Riordan array, so its inverse has a closed form too; the
truncation to Lambda_m of the inverse is exactly the inverse of the truncated
table (both factors are supported on index pairs i <= j).

Simple and projective rows come from the two short exact sequences
0 -> V_{i+} -> S_i -> V_i -> 0 and 0 -> S_{i-} -> P_i -> S_i -> 0, where i^-
and i^+ reflect i across the nearest critical wall (2 mod 3 for TL, odd for
Motzkin) and vanish when they leave Lambda_m.

The digit machinery: for a prime p (or the distinguished INFINITY) and l >= 2,
integers expand as a = sum a_i p^(i) with p^(i) = l * p^(i-1), p^(0) = 1; the
support of a collects the sign twists of the digits of a+1 and governs which
cell modules contain a given simple.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .diagrams import Family, rank_labels
from .errors import InputError, InternalCheckError
from .linalg import Mat, inverse


# ---------------------------------------------------------------------------
# closed-form entries

def pascal_entry(j: int, i: int) -> int:
    return comb(j, i)


def pascal_inverse_entry(i: int, j: int) -> int:
    """(i, j) entry of the inverse of the upper Pascal triangle C(j, i)."""
    if j < i:
        return 0
    return (-1) ** (j - i) * comb(j, i)


def tl_cell_entry(j: int, i: int) -> int:
    """alpha(j, i): fixed half-diagram count, a ballot number."""
    if j < i or (j - i) % 2:
        return 0
    c = (j - i) // 2
    value = Fraction(j - 2 * c + 1, j - c + 1) * comb(j, c)
    assert value.denominator == 1
    return int(value)


def tl_inverse_entry(i: int, j: int) -> int:
    """[x^((j-i)/2)] (1+x)^-(i+1), the inverse Catalan Riordan array."""
    if j < i or (j - i) % 2:
        return 0
    return (-1) ** ((j - i) // 2) * comb((i + j) // 2, i)


def mo_cell_entry(j: int, i: int) -> int:
    """beta(j, i): Motzkin cell dimension over j strands."""
    if j < i:
        return 0
    total = Fraction(0)
    t = 0
    while i + 2 * t <= j:
        total += Fraction(i + 1, i + t + 1) * comb(j, i + 2 * t) * comb(i + 2 * t, t)
        t += 1
    assert total.denominator == 1
    return int(total)


def mo_inverse_entry(i: int, j: int) -> int:
    """[x^(j-i)] (1+x+x^2)^-(i+1), the inverse Motzkin Riordan array."""
    if j < i:
        return 0
    d = j - i
    total = 0
    for r in range(d // 2 + 1):
        total += (-1) ** r * comb(i + r, r) * comb(j - r, d - 2 * r)
    return (-1) ** d * total


def mo_simple_entry_closed(j: int, i: int) -> int:
    """Closed form for the Motzkin simple character at even i = 2l > 0.

    Counts humps of height l across all Motzkin paths of order j; used as an
    independent cross-check of the reflection recursion.
    """
    if i <= 0 or i % 2:
        raise InputError("closed form applies to even labels i > 0")
    l = i // 2
    total = 0
    for t in range(j - i + 1):
        if t % 2 != j % 2:
            continue
        total_frac = Fraction(4 * l, j - t + 2 * l) * comb(j, t) * comb(
            j - t - 1, (j - t) // 2 + l - 1
        )
        assert total_frac.denominator == 1
        total += int(total_frac)
    return total


_CELL_ENTRY = {
    Family.PLANAR_ROOK: lambda j, i: pascal_entry(j, i),
    Family.TEMPERLEY_LIEB: tl_cell_entry,
    Family.MOTZKIN: mo_cell_entry,
}

_INVERSE_ENTRY = {
    Family.PLANAR_ROOK: pascal_inverse_entry,
    Family.TEMPERLEY_LIEB: tl_inverse_entry,
    Family.MOTZKIN: mo_inverse_entry,
}


# ---------------------------------------------------------------------------
# tables

KINDS = ("cell", "simple", "projective", "cell_inverse")


@dataclass(frozen=True)
class CharTable:
    """A labeled square table of exact integers (as rationals).

    Rows are modules, columns are rank classes, both indexed by the ascending
    labels; cell and simple tables are upper triangular with unit diagonal.
    """

    family: Family
    m: int
    kind: str
    labels: tuple[int, ...]
    mat: Mat

    def index(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError as exc:
            raise InputError(f"label {label} not in {self.labels}") from exc

    def entry(self, i: int, j: int) -> Fraction:
        return self.mat.rows[self.index(i)][self.index(j)]

    def row(self, label: int) -> tuple[Fraction, ...]:
        return self.mat.rows[self.index(label)]

    def dim(self, label: int) -> int:
        """Dimension of a module = its character at the identity class m."""
        return int(self.entry(label, self.m))


def _planar(family: Family) -> None:
    if family not in _CELL_ENTRY:
        raise InputError(f"no character tables for {family.value}")


def cell_table(family: Family, m: int) -> CharTable:
    _planar(family)
    if m < 1:
        raise InputError("need m >= 1")
    labels = rank_labels(family, m)
    entry = _CELL_ENTRY[family]
    mat = Mat([[entry(j, i) for j in labels] for i in labels])
    return CharTable(family, m, "cell", labels, mat)


def cell_inverse(family: Family, m: int) -> CharTable:
    """Closed-form inverse of the cell table (same row/column labels)."""
    _planar(family)
    if m < 1:
        raise InputError("need m >= 1")
    labels = rank_labels(family, m)
    entry = _INVERSE_ENTRY[family]
    mat = Mat([[entry(i, j) for j in labels] for i in labels])
    return CharTable(family, m, "cell_inverse", labels, mat)


# ---------------------------------------------------------------------------
# critical walls and reflections

@dataclass(frozen=True)
class Reflections:
    minus: int | None
    plus: int | None
    critical: bool


def reflections(i: int, family: Family, m: int) -> Reflections:
    """Reflections of a label across the nearest critical walls (char 0).

    Temperley-Lieb: walls are the integers 2 mod 3; Motzkin: a label is
    critical when odd, otherwise its mirrors are i-2 and i+2.  Planar rook is
    semisimple: nothing is critical and no label has a mirror.  Out-of-range
    mirrors are reported as absent (None) — callers treat absent as the zero
    module.
    """
    _planar(family)
    labels = rank_labels(family, m)
    if i not in labels:
        raise InputError(f"label {i} not in {labels}")
    if family is Family.PLANAR_ROOK:
        return Reflections(None, None, False)
    if family is Family.MOTZKIN:
        if i % 2:
            return Reflections(None, None, True)
        minus = i - 2 if i - 2 >= 0 else None
        plus = i + 2 if i + 2 <= m else None
        return Reflections(minus, plus, critical=False)
    # Temperley-Lieb
    if i % 3 == 2:
        return Reflections(None, None, True)
    below = i - 1
    while below % 3 != 2:
        below -= 1
    above = i + 1
    while above % 3 != 2:
        above += 1
    minus = 2 * below - i
    plus = 2 * above - i
    return Reflections(
        minus if minus in labels else None,
        plus if plus in labels else None,
        critical=False,
    )


def simple_table(family: Family, m: int) -> CharTable:
    """Characters of the simple modules (char 0).

    Computed top-down from the cell rows via chi_i = chi_{S_i} - chi_{i^+},
    which unrolls to the alternating sum along the reflection chain.
    """
    cell = cell_table(family, m)
    labels = cell.labels
    rows: dict[int, tuple[Fraction, ...]] = {}
    for i in reversed(labels):
        row = cell.row(i)
        refl = reflections(i, family, m)
        if not refl.critical and refl.plus is not None:
            upper = rows[refl.plus]
            row = tuple(a - b for a, b in zip(row, upper))
        rows[i] = row
    return CharTable(family, m, "simple", labels, Mat([rows[i] for i in labels]))


def projective_table(family: Family, m: int) -> CharTable:
    """Characters of the projective indecomposables (char 0).

    phi_i = chi_{S_i} + chi_{S_{i^-}} when the mirror exists, else the cell
    row itself (critical labels, leftmost labels, and all of planar rook).
    """
    cell = cell_table(family, m)
    labels = cell.labels
    rows = []
    for i in labels:
        row = cell.row(i)
        refl = reflections(i, family, m)
        if not refl.critical and refl.minus is not None:
            lower = cell.row(refl.minus)
            row = tuple(a + b for a, b in zip(row, lower))
        rows.append(row)
    return CharTable(family, m, "projective", labels, Mat(rows))


def table_of_kind(family: Family, m: int, kind: str) -> CharTable:
    if kind == "cell":
        return cell_table(family, m)
    if kind == "simple":
        return simple_table(family, m)
    if kind == "projective":
        return projective_table(family, m)
    if kind == "cell_inverse":
        return cell_inverse(family, m)
    raise InputError(f"unknown table kind {kind!r}")


def trivial_label(family: Family, m: int) -> int:
    """Label of the trivial module (the all-ones simple character row)."""
    _planar(family)
    return m % 2 if family is Family.TEMPERLEY_LIEB else 0


# ---------------------------------------------------------------------------
# (p, l) digit arithmetic

class _Infinity:
    """Distinguished 'infinite prime' for characteristic zero."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PLParams:
    """Mixed-radix parameters: first digit base l, higher digits base p."""

    p: int | _Infinity
    l: int

    def __post_init__(self):
        if self.l < 2:
            raise InputError("l must be at least 2")
        if self.p is not INFINITY and not _is_prime(self.p):
            raise InputError(f"p must be prime or INFINITY, got {self.p}")


CHAR0_TL = PLParams(INFINITY, 3)
CHAR0_MO = PLParams(INFINITY, 2)


def pl_digits(a: int, params: PLParams) -> list[int]:
    """Digits [a_t, ..., a_0] with a = sum a_i p^(i), p^(i) = l*p^(i-1).

    For p = INFINITY the higher digit is unbounded and the expansion is forced
    to exactly two digits [a // l, a mod l] (the leading digit may be 0), so
    that "all non-leading digits vanish" means "divisible by l".
    """
    if a < 0:
        raise InputError("digits of a negative integer")
    l = params.l
    if params.p is INFINITY:
        return [a // l, a % l]
    low, rest = a % l, a // l
    higher: list[int] = []
    while rest:
        higher.append(rest % params.p)
        rest //= params.p
    return list(reversed(higher)) + [low] if higher else [low]


def _radix_weights(count: int, params: PLParams) -> list[int]:
    """[p^(t), ..., p^(0)] matching a digit list of the given length."""
    weights = [1]
    for k in range(1, count):
        weights.append(params.l if k == 1 else weights[-1] * params.p)
    return list(reversed(weights))


def pl_support(a: int, params: PLParams) -> frozenset[int]:
    """Sign twists of the digits of a+1: the labels whose cell module holds V_a.

    { a_t p^(t) +- a_{t-1} p^(t-1) +- ... +- a_0 p^(0) - 1 } over all sign
    choices (the leading digit is never negated), duplicates removed.  Values
    below the label range may appear (virtual reflections); callers intersect
    with Lambda_m.
    """
    if a < 0:
        raise InputError("support of a negative integer")
    digits = pl_digits(a + 1, params)
    weights = _radix_weights(len(digits), params)
    lead = digits[0] * weights[0]
    rest = list(zip(digits[1:], weights[1:]))
    values = set()
    for signs in product((1, -1), repeat=len(rest)):
        values.add(lead + sum(s * d * w for s, (d, w) in zip(signs, rest)) - 1)
    return frozenset(values)


def ancestorless(a: int, params: PLParams) -> bool:
    """True when every digit of a except the leading one is zero."""
    digits = pl_digits(a, params)
    return all(d == 0 for d in digits[1:])


# Classes of monoids known to satisfy the group-injective condition over the
# complex numbers regardless of the strand count, with the reason in brief.
# Temperley-Lieb and Motzkin are the exceptions: there the condition holds
# exactly when m+1 is ancestorless (all non-leading digits zero) for
# (infinity, 3) resp. (infinity, 2), which group_injective evaluates.
GROUP_INJECTIVE_CHAR0_CATALOG = {
    "planar_rook": "semisimple inverse monoid",
    "rook": "inverse monoid: projectives are injective",
    "brauer": "induced sign module is cut out by an idempotent",
    "rook_brauer": "induced sign module is cut out by an idempotent",
    "partition": "induced sign module is cut out by an idempotent",
    "full_transformation": "no quiver arrows into induced modules",
    "partial_transformation": "no quiver arrows into induced modules",
    "order_preserving_partial": "no quiver arrows into induced modules",
    "partial_catalan": "no quiver arrows into induced modules",
    "partial_order_decreasing": "no quiver arrows into induced modules",
    "catalan": "induced trivial module is injective (J-trivial quiver)",
    "full_linear_mixed_characteristic": "self-injective direct factor",
}


def group_injective(family: Family, m: int) -> bool:
    """Char-0 group-injectivity, via the ancestorless criterion on m+1.

    Temperley-Lieb: (infinity, 3); Motzkin: (infinity, 2).  The remaining
    family tags are unconditionally group-injective over the complex numbers
    (see GROUP_INJECTIVE_CHAR0_CATALOG), so they report True.
    """
    if family is Family.TEMPERLEY_LIEB:
        return ancestorless(m + 1, CHAR0_TL)
    if family is Family.MOTZKIN:
        return ancestorless(m + 1, CHAR0_MO)
    return True


# ---------------------------------------------------------------------------
# decomposition matrices

@dataclass(frozen=True)
class DecompositionMatrix:
    """0/1 matrix D with D[z][i] = multiplicity of the simple V_i in the cell S_z."""

    family: Family
    m: int
    labels: tuple[int, ...]
    mat: Mat

    def entry(self, z: int, i: int) -> int:
        zi = self.labels.index(z)
        ii = self.labels.index(i)
        return int(self.mat.rows[zi][ii])

    def cell_factors(self, z: int) -> tuple[int, ...]:
        """Labels of the simples occurring in the cell module S_z."""
        zi = self.labels.index(z)
        return tuple(i for i, v in zip(self.labels, self.mat.rows[zi]) if v)


def decomposition_matrix(
    family: Family, m: int, params: PLParams | None = None
) -> DecompositionMatrix:
    """D[z][i] = 1 iff V_i is a composition factor of S_z.

    Temperley-Lieb accepts any (p, l) via supports; Motzkin only char 0
    (params omitted or (INFINITY, 2)), where S_z holds V_z and V_{z+2};
    planar rook is semisimple (identity matrix).
    """
    _planar(family)
    labels = rank_labels(family, m)
    n = len(labels)
    if family is Family.PLANAR_ROOK:
        mat = Mat.identity(n)
    elif family is Family.TEMPERLEY_LIEB:
        params = params or CHAR0_TL
        supports = {i: pl_support(i, params) for i in labels}
        mat = Mat([[int(z in supports[i]) for i in labels] for z in labels])
    else:
        if params is not None and params != CHAR0_MO:
            raise InputError("Motzkin decomposition matrices are char-0 only")
        rows = []
        for z in labels:
            factors = {z}
            refl = reflections(z, family, m)
            if not refl.critical and refl.plus is not None:
                factors.add(refl.plus)
            rows.append([int(i in factors) for i in labels])
        mat = Mat(rows)
    return DecompositionMatrix(family, m, labels, mat)


# ---------------------------------------------------------------------------
# consistency helpers and serialization

def check_riordan_inverse(family: Family, m: int) -> None:
    """cell_table(m) times cell_inverse(m) must be the identity, exactly."""
    prod = cell_table(family, m).mat * cell_inverse(family, m).mat
    if prod != Mat.identity(len(rank_labels(family, m))):
        raise InternalCheckError(f"Riordan inverse failed for {family.value} m={m}")


def check_inverse_against_elimination(family: Family, m: int) -> None:
    """Closed-form inverse must agree with fraction-free elimination."""
    if cell_inverse(family, m).mat != inverse(cell_table(family, m).mat):
        raise InternalCheckError(f"closed inverse != eliminated inverse ({family.value}, {m})")


def check_motzkin_simple_closed_form(m: int) -> None:
    """The reflection recursion must match the hump-count closed form."""
    table = simple_table(Family.MOTZKIN, m)
    for i in table.labels:
        if i == 0:
            if any(v != 1 for v in table.row(i)):
                raise InternalCheckError("Motzkin trivial character is not all-ones")
        elif i % 2 == 0:
            closed = tuple(mo_simple_entry_closed(j, i) for j in table.labels)
            if closed != tuple(int(v) for v in table.row(i)):
                raise InternalCheckError(f"Motzkin simple row {i} disagrees with closed form")


def table_to_json(table: CharTable) -> str:
    payload = {
        "family": table.family.value,
        "m": table.m,
        "kind": table.kind,
        "labels": list(table.labels),
        "rows": [[str(x) for x in row] for row in table.mat.rows],
    }
    return json.dumps(payload, indent=2, sort_keys=False)


def table_to_csv(table: CharTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["i/j"] + [str(j) for j in table.labels])
    for label, row in zip(table.labels, table.mat.rows):
        writer.writerow([str(label)] + [str(x) for x in row])
    return buf.getvalue()
