"""Planar diagram monoids: elements, composition, Green's data.

A diagram on m strands is a partition of the 2m boundary points of a
rectangle — top points 1..m (left to right), bottom points m+1..2m (the
point m+k sits below the point k) — into blocks of size at most two, drawable
without crossings.  Three planar families are enumerable and composable here:

* planar rook: every size-2 block joins a top point to a bottom point;
* Temperley-Lieb: a perfect matching (no singletons);
* Motzkin: any planar partial matching (singletons allowed).

The symmetric family tags exist only so growth-formula code elsewhere can
name them; they cannot be enumerated or composed.

Composition stacks the left factor on top of the right one, traces the glued
middle row, and discards closed middle loops and dead middle points, counting
both (the monoid convention: each discarded component contributes a factor 1).

Diagrams are immutable and every function here is pure.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb

from .errors import InputError


class Family(Enum):
    PLANAR_ROOK = "planar_rook"
    TEMPERLEY_LIEB = "temperley_lieb"
    MOTZKIN = "motzkin"
    ROOK = "rook"
    BRAUER = "brauer"
    ROOK_BRAUER = "rook_brauer"
    PARTITION = "partition"
    FULL_TRANSFORMATION = "full_transformation"
    PARTIAL_TRANSFORMATION = "partial_transformation"


PLANAR_FAMILIES = frozenset(
    {Family.PLANAR_ROOK, Family.TEMPERLEY_LIEB, Family.MOTZKIN}
)
SYMMETRIC_FAMILIES = frozenset(set(Family)) - PLANAR_FAMILIES

# Default strand-count caps for full enumeration; GROWTHLAB_MAX_M lifts them
# (at the user's risk: cost grows like the monoid order squared in green_data).
DEFAULT_MAX_M = {
    Family.PLANAR_ROOK: 6,
    Family.TEMPERLEY_LIEB: 7,
    Family.MOTZKIN: 5,
}


def max_enumerable_m(family: Family) -> int:
    env = os.environ.get("GROWTHLAB_MAX_M")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InputError(f"GROWTHLAB_MAX_M={env!r} is not an integer") from exc
    return DEFAULT_MAX_M[family]


Block = tuple[int, ...]


def _canonical_blocks(blocks) -> tuple[Block, ...]:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def _boundary_pos(p: int, m: int) -> int:
    # Walk the rectangle boundary: 1..m along the top, then 2m..m+1 along the
    # bottom right-to-left.  Chords are non-crossing iff their endpoints do
    # not interleave in this circular order.
    return p if p <= m else 3 * m + 1 - p


def blocks_are_planar(blocks, m: int) -> bool:
    pairs = [b for b in blocks if len(b) == 2]
    pos = [(tuple(sorted(_boundary_pos(p, m) for p in b))) for b in pairs]
    for (a1, a2), (b1, b2) in combinations(pos, 2):
        if (a1 < b1 < a2) != (a1 < b2 < a2):
            return False
    return True


@dataclass(frozen=True)
class Diagram:
    family: Family
    m: int
    blocks: tuple[Block, ...]  # canonical: blocks sorted, each block sorted

    def __post_init__(self):
        object.__setattr__(self, "blocks", _canonical_blocks(self.blocks))

    def rank(self) -> int:
        return sum(1 for b in self.blocks if len(b) == 2 and b[0] <= self.m < b[1])

    def __str__(self) -> str:
        return format_blocks(self.blocks, self.m)


def format_blocks(blocks, m: int) -> str:
    """Stable text form, e.g. "{1,2}{1',2'}" (primes mark bottom points)."""

    def name(p: int) -> str:
        return str(p) if p <= m else f"{p - m}'"

    return "".join("{" + ",".join(name(p) for p in b) + "}" for b in _canonical_blocks(blocks))


def parse_blocks(text: str, m: int) -> tuple[Block, ...]:
    """Inverse of format_blocks."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise InputError(f"malformed block list {text!r}")
    blocks = []
    for chunk in text[1:-1].split("}{"):
        points = []
        for tok in chunk.split(","):
            tok = tok.strip()
            if tok.endswith("'"):
                points.append(int(tok[:-1]) + m)
            else:
                points.append(int(tok))
        blocks.append(tuple(points))
    return _canonical_blocks(blocks)


def validate_diagram(d: Diagram) -> None:
    """Raise InputError unless d is a well-formed member of its family."""
    if d.family not in PLANAR_FAMILIES:
        raise InputError(f"{d.family.value} diagrams are not supported")
    if d.m < 1:
        raise InputError("need at least one strand")
    seen: list[int] = []
    for b in d.blocks:
        if len(b) not in (1, 2):
            raise InputError(f"block {b} has size {len(b)}")
        seen.extend(b)
    if sorted(seen) != list(range(1, 2 * d.m + 1)):
        raise InputError("blocks do not partition the 2m points")
    if d.family is Family.TEMPERLEY_LIEB and any(len(b) == 1 for b in d.blocks):
        raise InputError("Temperley-Lieb diagrams are perfect matchings")
    if d.family is Family.PLANAR_ROOK:
        for b in d.blocks:
            if len(b) == 2 and not (b[0] <= d.m < b[1]):
                raise InputError("planar rook blocks of size 2 must join top to bottom")
    if not blocks_are_planar(d.blocks, d.m):
        raise InputError("blocks cross")


def make_diagram(family: Family, m: int, blocks) -> Diagram:
    d = Diagram(family, m, _canonical_blocks(blocks))
    validate_diagram(d)
    return d


def identity_diagram(family: Family, m: int) -> Diagram:
    return Diagram(family, m, tuple((k, m + k) for k in range(1, m + 1)))


@dataclass(frozen=True)
class ComposeResult:
    result: Diagram
    loops: int
    middle_isolated: int


def _compose_blocks(
    blocks_a, blocks_b, m: int
) -> tuple[tuple[Block, ...], int, int]:
    """Core composition on canonical block tuples.

    Slots: 0..m-1 result top, m..2m-1 glued middle, 2m..3m-1 result bottom.
    Returns (result blocks, closed middle loops, dead middle points).
    """
    parent = list(range(3 * m))
    degree = [0] * (3 * m)

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        degree[x] += 1
        degree[y] += 1
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for b in blocks_a:
        if len(b) == 2:
            p, q = b
            union(p - 1 if p <= m else m + (p - m - 1), q - 1 if q <= m else m + (q - m - 1))
    for b in blocks_b:
        if len(b) == 2:
            p, q = b
            union(m + (p - 1) if p <= m else 2 * m + (p - m - 1),
                  m + (q - 1) if q <= m else 2 * m + (q - m - 1))

    components: dict[int, list[int]] = {}
    for slot in range(3 * m):
        components.setdefault(find(slot), []).append(slot)

    blocks: list[Block] = []
    loops = 0
    isolated = 0
    for members in components.values():
        boundary = []
        for s in members:
            if s < m:
                boundary.append(s + 1)
            elif s >= 2 * m:
                boundary.append(m + (s - 2 * m) + 1)
        if boundary:
            blocks.append(tuple(sorted(boundary)))
        elif all(degree[s] == 2 for s in members):
            loops += 1
        else:
            isolated += len(members)
    return _canonical_blocks(blocks), loops, isolated


def compose(a: Diagram, b: Diagram) -> ComposeResult:
    """Stack a on top of b; count and discard middle loops and dead points."""
    if a.family is not b.family or a.m != b.m:
        raise InputError("can only compose diagrams of the same family and size")
    blocks, loops, isolated = _compose_blocks(a.blocks, b.blocks, a.m)
    return ComposeResult(Diagram(a.family, a.m, blocks), loops, isolated)


def rank(d: Diagram) -> int:
    """Number of through strands (blocks joining top to bottom)."""
    return d.rank()


def flip(d: Diagram) -> Diagram:
    """Exchange top and bottom rows; an involutive anti-automorphism."""
    m = d.m
    return Diagram(
        d.family,
        m,
        tuple(tuple(p + m if p <= m else p - m for p in b) for b in d.blocks),
    )


def rank_labels(family: Family, m: int) -> tuple[int, ...]:
    """The set of possible ranks, ascending (TL ranks share the parity of m)."""
    if family is Family.TEMPERLEY_LIEB:
        return tuple(range(m % 2, m + 1, 2))
    return tuple(range(m + 1))


def class_idempotent(family: Family, m: int, j: int) -> Diagram:
    """The canonical rank-j idempotent.

    Through strands sit at positions 1..j.  The remaining positions are
    isolated top and bottom (planar rook, Motzkin) or paired into adjacent
    cups on top and adjacent caps on bottom (Temperley-Lieb).
    """
    if j not in rank_labels(family, m):
        raise InputError(f"rank {j} is not attained in {family.value} on {m} strands")
    blocks = [(k, m + k) for k in range(1, j + 1)]
    if family is Family.TEMPERLEY_LIEB:
        for k in range(j + 1, m, 2):
            blocks.append((k, k + 1))
            blocks.append((m + k, m + k + 1))
    else:
        for k in range(j + 1, m + 1):
            blocks.append((k,))
            blocks.append((m + k,))
    return Diagram(family, m, tuple(blocks))


def _noncrossing_matchings(points: tuple[int, ...], singletons: bool):
    """Planar (partial, if singletons) matchings of points listed in boundary order."""
    if not points:
        yield ()
        return
    p, rest = points[0], points[1:]
    if singletons:
        yield from _noncrossing_matchings(rest, singletons)
    for idx in range(len(rest)):
        if not singletons and idx % 2 == 1:
            continue  # a perfect matching needs an even number of points inside
        q = rest[idx]
        for inside in _noncrossing_matchings(rest[:idx], singletons):
            for after in _noncrossing_matchings(rest[idx + 1:], singletons):
                yield ((p, q),) + inside + after


def enumerate_diagrams(family: Family, m: int) -> tuple[Diagram, ...]:
    """Every element of the monoid, duplicate-free, in a deterministic order."""
    if family not in PLANAR_FAMILIES:
        raise InputError(f"{family.value} cannot be enumerated")
    bound = max_enumerable_m(family)
    if not 1 <= m <= bound:
        raise InputError(
            f"m={m} outside the enumerable range 1..{bound} for {family.value} "
            "(set GROWTHLAB_MAX_M to override)"
        )
    out: list[Diagram] = []
    if family is Family.PLANAR_ROOK:
        tops = range(1, m + 1)
        bottoms = range(m + 1, 2 * m + 1)
        for k in range(m + 1):
            for s in combinations(tops, k):
                for t in combinations(bottoms, k):
                    # the order-preserving matching is the unique planar one
                    blocks = [(a, b) for a, b in zip(s, t)]
                    blocks += [(p,) for p in tops if p not in s]
                    blocks += [(p,) for p in bottoms if p not in t]
                    out.append(Diagram(family, m, tuple(blocks)))
    else:
        boundary = tuple(range(1, m + 1)) + tuple(range(2 * m, m, -1))
        singletons = family is Family.MOTZKIN
        for pairs in _noncrossing_matchings(boundary, singletons):
            matched = {p for pair in pairs for p in pair}
            blocks = list(pairs) + [(p,) for p in range(1, 2 * m + 1) if p not in matched]
            out.append(Diagram(family, m, tuple(blocks)))
    return tuple(sorted(out, key=lambda d: d.blocks))


def expected_order(family: Family, m: int) -> int:
    """Known monoid orders (central binomial / Catalan / Motzkin numbers)."""
    if family is Family.PLANAR_ROOK:
        return comb(2 * m, m)
    if family is Family.TEMPERLEY_LIEB:
        return catalan_number(m)
    if family is Family.MOTZKIN:
        return motzkin_number(2 * m)
    raise InputError(f"no enumeration for {family.value}")


def catalan_number(k: int) -> int:
    """Independent recursion C_0 = 1, C_{k+1} = sum C_i C_{k-i}."""
    cs = [1]
    for n in range(k):
        cs.append(sum(cs[i] * cs[n - i] for i in range(n + 1)))
    return cs[k]


def motzkin_number(k: int) -> int:
    """Independent recursion M_k = M_{k-1} + sum_{i} M_i M_{k-2-i}."""
    ms = [1, 1]
    for n in range(2, k + 1):
        ms.append(ms[n - 1] + sum(ms[i] * ms[n - 2 - i] for i in range(n - 1)))
    return ms[k]


@dataclass(frozen=True)
class GreenData:
    j_class_count: int
    l_class_count: int
    r_class_count: int
    unit_count: int


def multiplication_table(elements: tuple[Diagram, ...]) -> list[list[int]]:
    """table[a][b] = index of elements[a] composed on top of elements[b].

    Quadratic in the monoid order; fine for the desk-scale sizes here.
    """
    index = {d.blocks: i for i, d in enumerate(elements)}
    m = elements[0].m
    blocks_list = [d.blocks for d in elements]
    table = []
    for ba in blocks_list:
        row = []
        for bb in blocks_list:
            blocks, _, _ = _compose_blocks(ba, bb, m)
            row.append(index[blocks])
        table.append(row)
    return table


def green_data(family: Family, m: int) -> GreenData:
    """Green's class counts computed from the enumerated monoid.

    L-classes group elements generating the same left ideal Mx (columns of the
    multiplication table), R-classes the same right ideal xM (rows), and
    J-classes are the components of the union of the two relations (D = J for
    finite monoids).  Units have a two-sided inverse.
    """
    elements = enumerate_diagrams(family, m)
    n = len(elements)
    table = multiplication_table(elements)
    one = next(i for i, d in enumerate(elements) if d == identity_diagram(family, m))

    l_of: dict[frozenset[int], list[int]] = {}
    for x in range(n):
        key = frozenset(table[y][x] for y in range(n))
        l_of.setdefault(key, []).append(x)
    r_of: dict[frozenset[int], list[int]] = {}
    for x in range(n):
        key = frozenset(table[x])
        r_of.setdefault(key, []).append(x)

    # J = components of the graph whose edges join members of a common L- or R-class
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cls in list(l_of.values()) + list(r_of.values()):
        root = find(cls[0])
        for x in cls[1:]:
            parent[find(x)] = root
    j_count = len({find(x) for x in range(n)})

    units = sum(
        1
        for x in range(n)
        if any(table[x][y] == one and table[y][x] == one for y in range(n))
    )
    return GreenData(j_count, len(l_of), len(r_of), units)
