import pytest
from hypothesis import given, strategies as st

from mahonian.partitions import (
    all_ranks,
    boundary_word,
    conjugate,
    delta,
    durfee,
    durfee_decomposition,
    ferrers,
    first_difference_class,
    format_partition,
    max_rank,
    max_rank_index,
    no_part_congruent,
    no_part_equal,
    parse_partition,
    partition_of_boundary,
    partition_of_word,
    partitions_by_boundary_length,
    partitions_in_box,
    partitions_of,
    rank_at_least,
    rank_at_most,
    rank_negative_in_box,
    ranks,
    size,
)
from mahonian.words import inv, parse_word, permutations_of, reverse_complement

partition_lists = st.integers(min_value=0, max_value=9).flatmap(
    lambda n: st.lists(st.integers(min_value=1, max_value=8), max_size=n).map(
        lambda xs: tuple(sorted(xs, reverse=True))
    )
)


def test_parse_format():
    assert parse_partition("(8,8,6,5,2,1)") == (8, 8, 6, 5, 2, 1)
    assert parse_partition("()") == ()
    assert parse_partition("") == ()
    assert format_partition((3, 2, 2)) == "(3,2,2)"
    with pytest.raises(ValueError):
        parse_partition("(1,2)")


def test_lambda_of_word():
    assert partition_of_word(parse_word("112211212"), ones=5, twos=4) == (3, 2, 2)
    assert partition_of_word((1, 1, 1, 2, 2)) == ()
    assert partition_of_word((2, 2, 1, 1, 1)) == (2, 2, 2)
    with pytest.raises(ValueError):
        partition_of_word(parse_word("1122"), ones=3, twos=1)


def test_boundary_word():
    assert boundary_word((3, 2, 2)) == parse_word("221121")
    assert boundary_word((1,)) == (2, 1)
    assert boundary_word(()) == ()
    assert partition_of_boundary(()) == ()
    with pytest.raises(ValueError):
        partition_of_boundary((1, 2))


def test_boundary_roundtrip_box():
    for lam in partitions_in_box(5, 5):
        assert partition_of_boundary(boundary_word(lam)) == lam


def test_ranks_examples():
    assert ranks((8, 8, 6, 5, 2, 1)) == (2, 3, 2, 1)
    assert max_rank((8, 8, 6, 5, 2, 1)) == 3
    assert max_rank_index((8, 8, 6, 5, 2, 1)) == 2
    assert ranks((4, 4, 4, 4)) == (0, 0, 0, 0)
    assert ranks((3, 3, 3)) == (0, 0, 0)
    assert ranks((8, 4, 3, 3, 3, 3, 2, 2, 1, 1)) == (-2, -4, -3)
    assert max_rank(()) is None
    assert max_rank_index(()) is None


def test_durfee_decomposition():
    assert durfee_decomposition((3, 2, 2)) == (2, (1,), (2,))
    assert durfee_decomposition(()) == (0, (), ())
    assert durfee_decomposition((4, 4, 4, 4)) == (4, (), ())
    d, right, below = durfee_decomposition((6, 5, 3, 2, 2, 1))
    assert size((6, 5, 3, 2, 2, 1)) == d * d + size(right) + size(below)


@given(partition_lists)
def test_conjugate_involution_and_rank_sign(p):
    assert conjugate(conjugate(p)) == p
    assert size(conjugate(p)) == size(p)
    assert durfee(conjugate(p)) == durfee(p)
    assert ranks(conjugate(p)) == tuple(-r for r in ranks(p))


def test_rank_conjugation_sets():
    # all-ranks >= 1 conjugates onto all-ranks <= -1, size by size
    for n in range(15):
        pos = {p for p in partitions_of(n) if all_ranks(p, lambda r: r >= 1)}
        neg = {p for p in partitions_of(n) if all_ranks(p, lambda r: r <= -1)}
        assert {conjugate(p) for p in pos} == neg


def test_lambda_conjugate_of_prime():
    for total in range(9):
        for m in range(total + 1):
            base = (1,) * m + (2,) * (total - m)
            for w in permutations_of(base):
                assert partition_of_word(reverse_complement(w)) == conjugate(
                    partition_of_word(w)
                )


def test_inv_equals_size():
    for w in permutations_of((1, 1, 1, 2, 2, 2)):
        assert inv(w) == size(partition_of_word(w))


def test_partition_streams():
    assert list(partitions_of(4)) == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    assert list(partitions_of(0)) == [()]
    assert sum(1 for _ in partitions_in_box(2, 2)) == 6
    # no-part-one partitions of 5: (5) and (3,2)
    assert [p for p in no_part_equal(1, 5) if size(p) == 5] == [(3, 2), (5,)]
    assert ([()] == [p for p in rank_at_least(1, 0)]) and ([()] == [p for p in rank_at_most(-1, 0)])
    assert (2, 2) in set(first_difference_class(0, 6))
    assert all(part % 5 in (2, 3) for p in no_part_congruent(5, 1, 12) for part in p)


def test_partitions_by_boundary_length():
    got = set(partitions_by_boundary_length(4))
    want = {(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1), (2, 2)}
    assert got == want


def test_rank_negative_in_box_counts():
    # sums to the Catalan number when weighted by nothing at full size range
    count = sum(1 for _ in rank_negative_in_box(3, 3))
    assert count == 5


def test_ferrers():
    assert ferrers((3, 1)) == ". . .\n."
    assert ferrers(()) == ""


def test_delta():
    assert delta(()) == 0
    assert delta((4,)) == 4
    assert delta((4, 4, 1)) == 0
