from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from ppsums.compositions import (
    Composition,
    Partition,
    coarsenings,
    coarsens,
    complement,
    composition_from_set,
    compositions_of,
    deconcatenations,
    descent_set,
    join,
    parse_composition,
    format_composition,
    partitions_of,
    rearrangements,
    refinements,
    reverse,
    shuffles,
    transpose,
    underlying_partition,
    z_value,
)

compositions = st.lists(st.integers(1, 4), max_size=6).map(Composition)


def merges_adjacent(coarse, fine):
    """Reference coarsening test: greedily sum runs of ``fine`` into the parts of ``coarse``."""
    coarse, fine = list(coarse), list(fine)
    i = 0
    for part in coarse:
        run = 0
        while run < part and i < len(fine):
            run += fine[i]
            i += 1
        if run != part:
            return False
    return i == len(fine)


def test_composition_rejects_nonpositive_parts():
    with pytest.raises(ValueError):
        Composition((1, 0, 2))
    with pytest.raises(TypeError):
        Composition((1.5,))


def test_partition_must_decrease():
    Partition((3, 1, 1))
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_size_and_length():
    a = Composition((1, 2, 1))
    assert (a.size, a.length) == (4, 3)
    assert (Composition().size, Composition().length) == (0, 0)


@pytest.mark.parametrize("alpha, expected", [((1, 2, 1), (2, 1, 1)), ((), ()), ((3, 3), (3, 3))])
def test_underlying_partition(alpha, expected):
    assert underlying_partition(alpha) == expected
    assert isinstance(underlying_partition(alpha), Partition)


@pytest.mark.parametrize("alpha, expected", [((2, 1, 1), 4), ((), 1), ((3, 3), 18)])
def test_z_value(alpha, expected):
    assert z_value(alpha) == expected


@pytest.mark.parametrize("alpha, expected", [((1, 2, 1), {1, 3}), ((4,), set()), ((1, 1, 1, 1), {1, 2, 3})])
def test_descent_set(alpha, expected):
    assert descent_set(alpha) == expected


@pytest.mark.parametrize("s, n, expected", [({1, 3}, 4, (1, 2, 1)), (set(), 4, (4,)), ({2}, 4, (2, 2))])
def test_composition_from_set(s, n, expected):
    assert composition_from_set(s, n) == expected


@pytest.mark.parametrize("bad", [{0}, {4}, {5}])
def test_composition_from_set_rejects_out_of_range(bad):
    with pytest.raises(ValueError):
        composition_from_set(bad, 4)


def test_complement_reverse_transpose_examples():
    assert complement((1, 2, 1)) == (2, 2)
    assert reverse((1, 2, 1)) == (1, 2, 1)
    assert transpose((3,)) == (1, 1, 1)
    assert complement(()) == ()


def test_coarsens_examples():
    assert coarsens((2, 2), (1, 1, 2))
    assert not coarsens((1, 1, 2), (2, 2))
    assert not coarsens((2,), (1, 2))


def test_join_examples():
    assert join((1, 2, 1), (1, 1, 2)) == (1, 3)
    assert join((1, 1, 1), (3,)) == (3,)
    with pytest.raises(ValueError):
        join((1,), (1, 1))


def test_shuffles_examples():
    assert shuffles((1,), (1,)) == [(1, 1), (1, 1)]
    assert sorted(shuffles((2,), (1,))) == [(1, 2), (2, 1)]
    assert sorted(shuffles((1, 2), (3,))) == sorted([(3, 1, 2), (1, 3, 2), (1, 2, 3)])


def test_shuffles_generation_order_alpha_first():
    assert shuffles((1, 2), (3,)) == [(1, 2, 3), (1, 3, 2), (3, 1, 2)]


def test_deconcatenations_examples():
    assert deconcatenations((1, 2)) == [((), (1, 2)), ((1,), (2,)), ((1, 2), ())]
    assert deconcatenations(()) == [((), ())]
    assert deconcatenations((3,)) == [((), (3,)), ((3,), ())]


def test_text_encoding():
    assert parse_composition("1,2,1") == (1, 2, 1)
    assert parse_composition("e") == ()
    assert format_composition(()) == "e"
    assert format_composition((1, 2, 1)) == "1,2,1"
    with pytest.raises(ValueError):
        parse_composition("1,,2")
    with pytest.raises(ValueError):
        parse_composition("1,0")


def test_compositions_of_counts_and_order():
    for n in range(1, 9):
        comps = compositions_of(n)
        assert len(comps) == 2 ** (n - 1)
        assert comps == sorted(comps)
    assert compositions_of(0) == [()]


def test_partitions_of_counts():
    # partition numbers p(0..8)
    assert [len(partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_set_bijection_exhaustive():
    for n in range(1, 9):
        for alpha in compositions_of(n):
            assert composition_from_set(descent_set(alpha), n) == alpha


def test_coarsens_matches_adjacent_merging():
    for n in range(6):
        comps = compositions_of(n)
        for a, b in product(comps, repeat=2):
            assert coarsens(a, b) == merges_adjacent(a, b)


def test_join_is_least_common_coarsening_exhaustive():
    for n in range(1, 8):
        comps = compositions_of(n)
        for a, b in product(comps, repeat=2):
            j = join(a, b)
            for g in comps:
                assert (coarsens(g, a) and coarsens(g, b)) == coarsens(g, j)


def test_refinements_and_coarsenings_agree_with_definition():
    for n in range(6):
        comps = compositions_of(n)
        for a in comps:
            assert set(refinements(a)) == {b for b in comps if coarsens(a, b)}
            assert set(coarsenings(a)) == {b for b in comps if coarsens(b, a)}


def test_rearrangements_distinct():
    assert rearrangements((2, 1, 1)) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert rearrangements(()) == [()]


@given(compositions)
def test_operators_are_involutions(alpha):
    assert complement(complement(alpha)) == alpha
    assert reverse(reverse(alpha)) == alpha
    assert transpose(transpose(alpha)) == alpha
    assert transpose(alpha) == complement(reverse(alpha))


@given(compositions)
def test_coarsens_reflexive(alpha):
    assert coarsens(alpha, alpha)
    assert join(alpha, alpha) == alpha


@given(compositions, compositions)
def test_shuffle_count_is_binomial(a, b):
    assert len(shuffles(a, b)) == comb(len(a) + len(b), len(a))


@given(compositions, compositions)
def test_shuffles_have_concatenation_parts(a, b):
    for g in shuffles(a, b):
        assert sorted(g) == sorted(a + b)
        assert z_value(g) == z_value(a + b)


@given(compositions)
def test_z_value_reverse_invariant(alpha):
    assert z_value(reverse(alpha)) == z_value(alpha)


@given(compositions)
def test_concatenation_stays_composition(alpha):
    out = alpha + Composition((1,))
    assert isinstance(out, Composition)
    assert out.size == alpha.size + 1
