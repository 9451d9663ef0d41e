import pytest

from src.core.combinatorics import (
    Composition,
    UnorderedPartition,
    capped_composition_count,
    capped_compositions,
    composition_from_index,
    composition_index,
    compositions,
    compositions_by_first_part,
    divisors,
    iter_compositions,
    mobius,
    ones_count,
    partition_count,
    unordered_partitions,
)
from src.utils.errors import InvalidComposition

C = Composition.of


def up_to(hi, slow_from, lo=0):
    """b values lo..hi, with those from slow_from on marked slow"""
    return [
        b if b < slow_from else pytest.param(b, marks=pytest.mark.slow)
        for b in range(lo, hi + 1)
    ]


def test_canonical_order_b4():
    assert compositions(4) == (
        C(4),
        C(3, 1),
        C(2, 2),
        C(1, 3),
        C(2, 1, 1),
        C(1, 2, 1),
        C(1, 1, 2),
        C(1, 1, 1, 1),
    )


def test_empty_composition_only_for_zero():
    assert compositions(0) == (C(),)
    assert compositions(1) == (C(1),)


@pytest.mark.parametrize("b", up_to(20, slow_from=15, lo=1))
def test_composition_counts(b):
    cs = list(iter_compositions(b))
    assert len(cs) == 2 ** (b - 1)
    assert len(set(cs)) == len(cs)
    assert all(c.total == b for c in cs)


def test_capped_compositions():
    assert capped_compositions(4, 2) == (
        C(2, 2),
        C(2, 1, 1),
        C(1, 2, 1),
        C(1, 1, 2),
        C(1, 1, 1, 1),
    )
    assert capped_compositions(3, 1) == (C(1, 1, 1),)
    assert capped_compositions(3, 5) == compositions(3)


@pytest.mark.parametrize("b", range(0, 9))
@pytest.mark.parametrize("kappa", [1, 2, 3, None])
def test_capped_count_matches_enumeration(b, kappa):
    assert capped_composition_count(b, kappa) == len(capped_compositions(b, kappa))


@pytest.mark.parametrize("b", up_to(20, slow_from=15))
@pytest.mark.parametrize("kappa", [1, 2, 3, 4, 5])
def test_capped_count_recurrence(b, kappa):
    # first part j in 1..kappa leaves a capped composition of b - j
    expected = sum(
        capped_composition_count(b - j, kappa) for j in range(1, min(kappa, b) + 1)
    )
    if b == 0:
        expected = 1
    assert capped_composition_count(b, kappa) == expected
    assert sum(1 for _ in iter_compositions(b, kappa)) == expected


def test_fibonacci_for_kappa_two():
    fib = [1, 1, 2, 3, 5, 8, 13, 21]
    assert [capped_composition_count(i, 2) for i in range(8)] == fib


@pytest.mark.parametrize("b", range(0, 13))
def test_index_and_unrank_invert(b):
    for i, c in enumerate(compositions(b)):
        assert composition_index(c) == i
        assert composition_from_index(b, i) == c


def test_unrank_out_of_range():
    with pytest.raises(IndexError):
        composition_from_index(3, 4)


def test_group_by_first_part():
    groups = compositions_by_first_part(4)
    assert groups[4] == (C(4),)
    assert groups[1] == (C(1, 3), C(1, 2, 1), C(1, 1, 2), C(1, 1, 1, 1))
    assert sum(len(g) for g in groups.values()) == 8


def test_bad_parts_rejected():
    with pytest.raises(InvalidComposition):
        Composition((2, 0, 1))
    with pytest.raises(InvalidComposition):
        UnorderedPartition((1, 2))


def test_composition_str():
    assert str(C(2, 1)) == "(2,1)"
    assert str(C()) == "()"


def test_partitions():
    assert [p.parts for p in unordered_partitions(4)] == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]
    p = (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176)
    assert tuple(partition_count(b) for b in range(16)) == p
    assert all(len(unordered_partitions(b)) == partition_count(b) for b in range(12))


def test_ones_count():
    assert ones_count(UnorderedPartition((3, 1, 1))) == 2
    assert ones_count(UnorderedPartition(())) == 0


def test_mobius_and_divisors():
    mu = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    assert [mobius(n) for n in range(1, 13)] == mu
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(1) == (1,)
    with pytest.raises(ValueError):
        mobius(0)


def test_mobius_sums_vanish():
    assert sum(mobius(d) for d in divisors(1)) == 1
    for n in range(2, 1001):
        assert sum(mobius(d) for d in divisors(n)) == 0, n
