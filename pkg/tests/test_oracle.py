import random
from math import comb

import pytest

from growthlab.diagrams import (
    Family,
    catalan_number,
    class_idempotent,
    compose,
    enumerate_diagrams,
    motzkin_number,
    rank,
    rank_labels,
)
from growthlab.errors import InputError
from growthlab.linalg import Mat, kernel_and_rank, mat_mul
from growthlab.oracle import (
    cell_character,
    cell_module,
    count_check,
    gram_matrix,
    half_diagrams,
    oracle_cell_table,
    oracle_length,
    oracle_multiplicity,
    oracle_product_multiplicity,
    oracle_simple_table,
    simple_character,
    simple_dimension,
)
from growthlab.growth import module_spec
from growthlab.tables import cell_table, simple_table


# ---------------------------------------------------------------------------
# half diagrams

def test_half_diagram_counts():
    assert len(half_diagrams(Family.TEMPERLEY_LIEB, 7, 3)) == 14
    assert len(half_diagrams(Family.MOTZKIN, 5, 1)) == 30
    for m in range(1, 6):
        for i in range(m + 1):
            assert len(half_diagrams(Family.PLANAR_ROOK, m, i)) == comb(m, i)


@pytest.mark.parametrize(
    "family,ms",
    [(Family.PLANAR_ROOK, range(1, 7)), (Family.TEMPERLEY_LIEB, range(1, 8)), (Family.MOTZKIN, range(1, 6))],
)
def test_half_diagram_counts_match_cell_dimensions(family, ms):
    for m in ms:
        table = cell_table(family, m)
        for i in table.labels:
            assert len(half_diagrams(family, m, i)) == table.dim(i)


def test_half_diagrams_are_planar_with_uncovered_defects():
    for family, m, i in (
        (Family.TEMPERLEY_LIEB, 7, 3),
        (Family.MOTZKIN, 5, 1),
        (Family.MOTZKIN, 4, 2),
    ):
        for h in half_diagrams(family, m, i):
            for (a, b) in h.cups:
                for (c, d) in h.cups:
                    assert not (a < c < b < d)  # cups never cross on the line
                for v in h.defects:
                    assert not (a < v < b)  # defects escape upward
    with pytest.raises(InputError):
        half_diagrams(Family.TEMPERLEY_LIEB, 7, 2)


def test_half_diagrams_sorted_unique():
    states = half_diagrams(Family.MOTZKIN, 4, 1)
    keys = [(h.cups, h.defects) for h in states]
    assert keys == sorted(keys)
    assert len(set(states)) == len(states)


# ---------------------------------------------------------------------------
# cell actions

def test_identity_acts_as_identity():
    for family, m, i in ((Family.TEMPERLEY_LIEB, 5, 1), (Family.MOTZKIN, 3, 1), (Family.PLANAR_ROOK, 4, 2)):
        module = cell_module(family, m, i)
        ident = class_idempotent(family, m, m)
        assert module.action(ident) == Mat.identity(module.dim)


def test_low_rank_kills_high_defect_modules():
    module = cell_module(Family.TEMPERLEY_LIEB, 4, 2)
    e0 = class_idempotent(Family.TEMPERLEY_LIEB, 4, 0)
    assert module.action(e0) == Mat.zero(module.dim, module.dim)


def test_action_entries_are_zero_one():
    module = cell_module(Family.MOTZKIN, 3, 1)
    for d in enumerate_diagrams(Family.MOTZKIN, 3):
        mat = module.action(d)
        assert all(x in (0, 1) for row in mat.rows for x in row)


@pytest.mark.parametrize(
    "family,m",
    [(Family.TEMPERLEY_LIEB, 4), (Family.PLANAR_ROOK, 3), (Family.MOTZKIN, 3)],
)
def test_action_multiplicative_exhaustive(family, m):
    elements = enumerate_diagrams(family, m)
    for i in rank_labels(family, m):
        module = cell_module(family, m, i)
        for a in elements:
            ma = module.action(a)
            for b in elements:
                product = compose(a, b).result
                assert mat_mul(ma, module.action(b)) == module.action(product)


@pytest.mark.parametrize(
    "family,m",
    [(Family.TEMPERLEY_LIEB, 6), (Family.PLANAR_ROOK, 5), (Family.MOTZKIN, 4)],
)
def test_action_multiplicative_random(family, m):
    rng = random.Random(23)
    elements = enumerate_diagrams(family, m)
    for i in rank_labels(family, m):
        module = cell_module(family, m, i)
        for _ in range(40):
            a, b = rng.choice(elements), rng.choice(elements)
            assert mat_mul(module.action(a), module.action(b)) == module.action(
                compose(a, b).result
            )


# ---------------------------------------------------------------------------
# characters and the cellular form

def test_cell_characters_match_closed_tables():
    for family, ms in (
        (Family.PLANAR_ROOK, range(1, 7)),
        (Family.TEMPERLEY_LIEB, range(1, 8)),
        (Family.MOTZKIN, range(1, 6)),
    ):
        for m in ms:
            assert oracle_cell_table(family, m) == cell_table(family, m).mat


def test_cell_character_spot_values():
    assert cell_character(Family.TEMPERLEY_LIEB, 7, 3, 5) == 4
    assert cell_character(Family.MOTZKIN, 5, 2, 4) == 9
    for m, i, j in ((4, 1, 3), (5, 2, 4), (6, 3, 5)):
        assert cell_character(Family.PLANAR_ROOK, m, i, j) == comb(j, i)


def test_gram_matrices():
    assert gram_matrix(Family.TEMPERLEY_LIEB, 2, 0) == Mat([(1,)])
    g = gram_matrix(Family.TEMPERLEY_LIEB, 4, 0)
    assert g == Mat([(1, 1), (1, 1)])
    assert kernel_and_rank(g)[0] == 1
    for family, m in ((Family.TEMPERLEY_LIEB, 6), (Family.MOTZKIN, 4), (Family.PLANAR_ROOK, 4)):
        # the top cell has the all-defects half diagram as its only basis element
        assert gram_matrix(family, m, m) == Mat.identity(1)


def test_gram_diagonal_is_all_ones():
    # self-pairing closes every cup into a loop and runs defects straight up
    for family, m, i in (
        (Family.TEMPERLEY_LIEB, 6, 2),
        (Family.MOTZKIN, 4, 1),
        (Family.PLANAR_ROOK, 4, 2),
    ):
        g = gram_matrix(family, m, i)
        assert all(g.rows[k][k] == 1 for k in range(g.nrows))


def test_gram_rank_equals_simple_dimension():
    for family, ms in (
        (Family.PLANAR_ROOK, range(1, 7)),
        (Family.TEMPERLEY_LIEB, range(1, 8)),
        (Family.MOTZKIN, range(1, 6)),
    ):
        for m in ms:
            table = simple_table(family, m)
            for i in table.labels:
                assert simple_dimension(family, m, i) == table.dim(i)


def test_simple_characters_match_closed_tables():
    for family, ms in (
        (Family.PLANAR_ROOK, range(1, 7)),
        (Family.TEMPERLEY_LIEB, range(1, 8)),
        (Family.MOTZKIN, range(1, 6)),
    ):
        for m in ms:
            assert oracle_simple_table(family, m) == simple_table(family, m).mat


def test_simple_character_spot_values():
    assert simple_character(Family.TEMPERLEY_LIEB, 7, 3, 7) == 13
    assert simple_character(Family.MOTZKIN, 5, 2, 5) == 20
    for i in rank_labels(Family.MOTZKIN, 4):
        assert simple_character(Family.MOTZKIN, 4, i, i) == 1


def test_character_constancy_across_same_rank_idempotents():
    rng = random.Random(17)
    for family, m in ((Family.TEMPERLEY_LIEB, 4), (Family.MOTZKIN, 3), (Family.PLANAR_ROOK, 3)):
        elements = enumerate_diagrams(family, m)
        idempotents = [d for d in elements if compose(d, d).result == d]
        by_rank = {}
        for d in idempotents:
            by_rank.setdefault(rank(d), []).append(d)
        for i in rank_labels(family, m):
            module = cell_module(family, m, i)
            for j, pool in by_rank.items():
                sample = pool if len(pool) <= 20 else rng.sample(pool, 20)
                canonical = module.action(class_idempotent(family, m, j)).trace()
                for d in sample:
                    assert module.action(d).trace() == canonical


# ---------------------------------------------------------------------------
# multiplicities and counts

def test_oracle_multiplicity_tl7():
    spec = module_spec(Family.TEMPERLEY_LIEB, 7, "V3")
    assert oracle_multiplicity(spec, 2, 7) == 84
    assert oracle_multiplicity(spec, 1, 3) == 1
    assert oracle_multiplicity(spec, 0, 1) == 1  # the trivial module is V_1
    assert oracle_length(spec, 2) == 97


def test_oracle_multiplicity_cell_module_at_n1():
    spec = module_spec(Family.TEMPERLEY_LIEB, 7, "S3")
    assert oracle_multiplicity(spec, 1, 3) == 1
    assert oracle_multiplicity(spec, 1, 7) == 1
    assert oracle_multiplicity(spec, 1, 5) == 0


def test_oracle_product_multiplicity_planar_rook():
    v1 = module_spec(Family.PLANAR_ROOK, 5, "V1")
    assert oracle_product_multiplicity(v1, v1, 2) == 2
    assert oracle_multiplicity(v1, 2, 2) == 2


def test_oracle_multiplicity_validation():
    spec = module_spec(Family.TEMPERLEY_LIEB, 7, "V3")
    with pytest.raises(InputError):
        oracle_multiplicity(spec, 2, 4)
    with pytest.raises(InputError):
        oracle_multiplicity(spec, -1, 3)


def test_count_check():
    assert count_check(Family.PLANAR_ROOK, 4).actual == 70
    assert count_check(Family.TEMPERLEY_LIEB, 5).actual == 42
    assert count_check(Family.MOTZKIN, 3).actual == 51


def test_counting_sequences():
    assert [catalan_number(k) for k in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert [motzkin_number(k) for k in range(11)] == [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]
