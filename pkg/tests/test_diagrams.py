import random
from itertools import combinations

import pytest

from growthlab.diagrams import (
    Diagram,
    Family,
    blocks_are_planar,
    class_idempotent,
    compose,
    enumerate_diagrams,
    expected_order,
    flip,
    format_blocks,
    green_data,
    identity_diagram,
    make_diagram,
    parse_blocks,
    rank,
    rank_labels,
    validate_diagram,
)
from growthlab.errors import InputError
from growthlab.tables import cell_table

SMALL = [(Family.PLANAR_ROOK, 4), (Family.TEMPERLEY_LIEB, 5), (Family.MOTZKIN, 3)]


@pytest.mark.parametrize(
    "family,ms",
    [
        (Family.PLANAR_ROOK, range(1, 6)),
        (Family.TEMPERLEY_LIEB, range(1, 7)),
        (Family.MOTZKIN, range(1, 5)),
    ],
)
def test_enumeration_counts(family, ms):
    for m in ms:
        elements = enumerate_diagrams(family, m)
        assert len(elements) == expected_order(family, m)
        assert len(set(elements)) == len(elements)


@pytest.mark.parametrize("family,m", SMALL)
def test_enumerated_diagrams_are_valid(family, m):
    for d in enumerate_diagrams(family, m):
        validate_diagram(d)


def test_enumeration_bounds():
    with pytest.raises(InputError):
        enumerate_diagrams(Family.TEMPERLEY_LIEB, 8)
    with pytest.raises(InputError):
        enumerate_diagrams(Family.BRAUER, 2)


def test_enumeration_bound_override(monkeypatch):
    monkeypatch.setenv("GROWTHLAB_MAX_M", "2")
    with pytest.raises(InputError):
        enumerate_diagrams(Family.MOTZKIN, 3)
    assert len(enumerate_diagrams(Family.MOTZKIN, 2)) == 9


def test_validation_rejects_bad_blocks():
    with pytest.raises(InputError):  # crossing chords (a transposition)
        make_diagram(Family.TEMPERLEY_LIEB, 2, [(1, 4), (2, 3)])
    with pytest.raises(InputError):  # TL has no singletons
        make_diagram(Family.TEMPERLEY_LIEB, 1, [(1,), (2,)])
    with pytest.raises(InputError):  # planar rook blocks must propagate
        make_diagram(Family.PLANAR_ROOK, 2, [(1, 2), (3,), (4,)])
    with pytest.raises(InputError):  # not a partition
        make_diagram(Family.MOTZKIN, 2, [(1, 2), (2, 3), (4,)])


def test_planarity_predicate():
    assert blocks_are_planar([(1, 3), (2, 4)], 2)  # identity strands
    assert blocks_are_planar([(1, 2), (3, 4)], 2)  # cup over cap
    assert not blocks_are_planar([(1, 4), (2, 3)], 2)  # transposition


def test_compose_identity():
    for family, m in SMALL:
        ident = identity_diagram(family, m)
        for d in enumerate_diagrams(family, m)[:10]:
            res = compose(ident, d)
            assert res == type(res)(d, 0, 0)
            assert compose(d, ident).result == d


def test_compose_tl2_loop():
    e = make_diagram(Family.TEMPERLEY_LIEB, 2, [(1, 2), (3, 4)])
    res = compose(e, e)
    assert res.result == e
    assert res.loops == 1
    assert res.middle_isolated == 0


def test_compose_planar_rook_disjoint_domains():
    d = make_diagram(Family.PLANAR_ROOK, 2, [(1, 3), (2,), (4,)])
    e = make_diagram(Family.PLANAR_ROOK, 2, [(2, 4), (1,), (3,)])
    res = compose(d, e)
    assert res.result == make_diagram(Family.PLANAR_ROOK, 2, [(1,), (2,), (3,), (4,)])
    assert (res.loops, res.middle_isolated) == (0, 0)


def test_compose_counts_dead_middle_points():
    e0 = class_idempotent(Family.MOTZKIN, 2, 0)  # everything isolated
    res = compose(e0, e0)
    assert res.result == e0
    assert res.loops == 0
    assert res.middle_isolated == 2


def test_compose_mismatch_errors():
    with pytest.raises(InputError):
        compose(identity_diagram(Family.MOTZKIN, 2), identity_diagram(Family.MOTZKIN, 3))
    with pytest.raises(InputError):
        compose(
            identity_diagram(Family.MOTZKIN, 2),
            identity_diagram(Family.PLANAR_ROOK, 2),
        )


@pytest.mark.parametrize("family,m", SMALL)
def test_associativity_with_loop_bookkeeping(family, m):
    rng = random.Random(hash((family.value, m)) & 0xFFFF)
    elements = enumerate_diagrams(family, m)
    for _ in range(1000):
        a, b, c = (rng.choice(elements) for _ in range(3))
        ab = compose(a, b)
        bc = compose(b, c)
        left = compose(ab.result, c)
        right = compose(a, bc.result)
        assert left.result == right.result
        # loop counts are the delta-exponents, so they must add up the same
        # way on both sides; dead middle points carry no coefficient and a
        # dead strand can span two gluing layers, so their counts need not.
        assert ab.loops + left.loops == bc.loops + right.loops


def test_rank_basics():
    for family, m in SMALL:
        assert rank(identity_diagram(family, m)) == m
    assert rank(make_diagram(Family.TEMPERLEY_LIEB, 2, [(1, 2), (3, 4)])) == 0


@pytest.mark.parametrize("family,m", SMALL)
def test_rank_submultiplicative(family, m):
    rng = random.Random(5)
    elements = enumerate_diagrams(family, m)
    for _ in range(300):
        a, b = rng.choice(elements), rng.choice(elements)
        assert rank(compose(a, b).result) <= min(rank(a), rank(b))


def test_flip_involution_and_identity():
    for family, m in SMALL:
        ident = identity_diagram(family, m)
        assert flip(ident) == ident
        for d in enumerate_diagrams(family, m)[:20]:
            assert flip(flip(d)) == d


def test_flip_antihomomorphism_exhaustive_tl3():
    elements = enumerate_diagrams(Family.TEMPERLEY_LIEB, 3)
    for a in elements:
        for b in elements:
            assert flip(compose(a, b).result) == compose(flip(b), flip(a)).result


def test_class_idempotent_properties():
    for family, m in [(Family.PLANAR_ROOK, 4), (Family.TEMPERLEY_LIEB, 6), (Family.MOTZKIN, 4)]:
        for j in rank_labels(family, m):
            e = class_idempotent(family, m, j)
            assert rank(e) == j
            res = compose(e, e)
            assert res.result == e
            expected_loops = (m - j) // 2 if family is Family.TEMPERLEY_LIEB else 0
            assert res.loops == expected_loops
        assert class_idempotent(family, m, m) == identity_diagram(family, m)
    with pytest.raises(InputError):
        class_idempotent(Family.TEMPERLEY_LIEB, 6, 3)  # wrong parity
    with pytest.raises(InputError):
        class_idempotent(Family.MOTZKIN, 4, 5)


def test_canonical_idempotents_hit_every_rank_once():
    for family, m in SMALL:
        ranks = [rank(class_idempotent(family, m, j)) for j in rank_labels(family, m)]
        assert ranks == list(rank_labels(family, m))


@pytest.mark.parametrize(
    "family,m,expected_l",
    [
        (Family.PLANAR_ROOK, 3, 8),  # bottom configurations: 2^m
        (Family.TEMPERLEY_LIEB, 5, 10),
        (Family.MOTZKIN, 2, 5),
    ],
)
def test_green_data_small(family, m, expected_l):
    gd = green_data(family, m)
    assert gd.l_class_count == expected_l
    assert gd.r_class_count == gd.l_class_count
    assert gd.j_class_count == len(rank_labels(family, m))
    assert gd.unit_count == 1
    # L-classes are in bijection with half diagrams (all defect counts)
    table = cell_table(family, m)
    assert gd.l_class_count == sum(table.dim(i) for i in table.labels)


def test_j_classes_are_rank_classes():
    from growthlab.diagrams import multiplication_table

    for family, m in [(Family.TEMPERLEY_LIEB, 4), (Family.MOTZKIN, 2), (Family.PLANAR_ROOK, 3)]:
        elements = enumerate_diagrams(family, m)
        n = len(elements)
        table = multiplication_table(elements)
        # two-sided ideal fingerprints: MxM = union of zM over z in Mx
        ideals = []
        for x in range(n):
            left = {table[y][x] for y in range(n)}
            ideals.append(frozenset(table[z][y] for z in left for y in range(n)))
        by_ideal = {}
        for x, ideal in enumerate(ideals):
            by_ideal.setdefault(ideal, set()).add(x)
        by_rank = {}
        for x, d in enumerate(elements):
            by_rank.setdefault(rank(d), set()).add(x)
        assert set(map(frozenset, by_ideal.values())) == set(map(frozenset, by_rank.values()))


def test_green_data_tl7_j_classes():
    gd = green_data(Family.TEMPERLEY_LIEB, 7)
    assert gd.j_class_count == 4
    assert gd.unit_count == 1
    assert gd.l_class_count == 14 + 14 + 6 + 1


def test_text_format_round_trip():
    for family, m in SMALL:
        for d in enumerate_diagrams(family, m)[:15]:
            text = format_blocks(d.blocks, m)
            assert parse_blocks(text, m) == d.blocks
    e = make_diagram(Family.TEMPERLEY_LIEB, 2, [(1, 2), (3, 4)])
    assert str(e) == "{1,2}{1',2'}"
    with pytest.raises(InputError):
        parse_blocks("not blocks", 2)


def test_diagram_canonicalization_and_subset_helper():
    d = Diagram(Family.MOTZKIN, 2, ((4, 2), (3,), (1,)))
    assert d.blocks == ((1,), (2, 4), (3,))
    # combinations used by the planar rook enumeration stay sorted
    assert list(combinations(range(1, 4), 2)) == [(1, 2), (1, 3), (2, 3)]
