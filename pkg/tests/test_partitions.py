import pytest
from hypothesis import given
from hypothesis import strategies as st

from psiprime import (
    DomainError,
    NotationError,
    Partition,
    SizeLimitError,
    lex_compare,
    parse_partition,
    partitions_of,
)
from oracles import partition_count


def test_partitions_of_3_exhaustive():
    assert [q.parts for q in partitions_of(3)] == [(1, 1, 1), (2, 1), (3,)]


def test_partitions_of_zero_is_empty_partition():
    assert [q.parts for q in partitions_of(0)] == [()]


def test_partitions_of_12_count_against_recurrence():
    assert partition_count(12) == 77
    assert len(partitions_of(12)) == 77


@pytest.mark.parametrize("n", range(21))
def test_partition_counts_match_recurrence(n):
    assert len(partitions_of(n)) == partition_count(n)


@pytest.mark.parametrize("n", [0, 1, 5, 9, 14])
def test_partitions_strictly_ascending_no_duplicates(n):
    qs = partitions_of(n)
    assert len(set(qs)) == len(qs)
    for a, b in zip(qs, qs[1:]):
        assert lex_compare(a, b) == -1


def test_partition_cap():
    with pytest.raises(SizeLimitError):
        partitions_of(65)


def test_cap_boundary_n_64_is_accepted():
    from psiprime import iter_partitions

    assert sum(1 for _ in iter_partitions(64)) == partition_count(64) == 1_741_630


def test_partition_validation():
    with pytest.raises(DomainError):
        Partition((1, 2))  # increasing
    with pytest.raises(DomainError):
        Partition((2, 0))
    with pytest.raises(DomainError):
        Partition((-1,))


def test_lex_compare_examples():
    assert lex_compare(Partition((2, 1)), Partition((3,))) == -1
    assert lex_compare(Partition((1, 1, 1)), Partition((1, 1, 1))) == 0
    # padded tuples (2,2,0,0) vs (2,1,1,0) differ first at position 2
    assert lex_compare(Partition((2, 2)), Partition((2, 1, 1))) == 1


def test_lex_compare_rejects_different_n():
    with pytest.raises(DomainError):
        lex_compare(Partition((2,)), Partition((2, 1)))


@st.composite
def same_n_partitions(draw, count=2, max_n=16):
    n = draw(st.integers(min_value=0, max_value=max_n))
    qs = partitions_of(n)
    return tuple(draw(st.sampled_from(qs)) for _ in range(count))


@given(same_n_partitions(count=2))
def test_lex_compare_antisymmetric(pair):
    a, b = pair
    assert lex_compare(a, b) == -lex_compare(b, a)
    assert (lex_compare(a, b) == 0) == (a == b)


@given(same_n_partitions(count=3))
def test_lex_compare_transitive(triple):
    a, b, c = triple
    if lex_compare(a, b) <= 0 and lex_compare(b, c) <= 0:
        assert lex_compare(a, c) <= 0


def test_partition_text_round_trip():
    for n in range(11):
        for q in partitions_of(n):
            assert parse_partition(str(q)) == q


def test_parse_partition_examples():
    assert parse_partition("[3,1,1]").parts == (3, 1, 1)
    assert parse_partition("[]").parts == ()
    with pytest.raises(NotationError):
        parse_partition("3,1,1")
    with pytest.raises(NotationError):
        parse_partition("[3,1,")
    with pytest.raises(NotationError):
        parse_partition("[1,3]")  # not weakly decreasing
