from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from f2sym.partitions import (
    Partition, border_strip_additions, conjugate, count_self_conjugate, enumerate_partitions,
    gamma_hook, is_border_strip, is_self_conjugate, parse_partition, partition_count,
    square_partition,
)
from oracles import distinct_odd_parts, partition_number


def test_partition_validates():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, 0])
    assert Partition([3, 1, 1]).size == 5
    assert str(Partition([3, 1, 1])) == "[3,1,1]"
    assert str(Partition()) == "[]"


def test_parse_partition():
    assert parse_partition("[3,1,1]") == (3, 1, 1)
    assert parse_partition(" [ ] ") == ()
    with pytest.raises(ValueError):
        parse_partition("3,1")


@pytest.mark.parametrize("lam,expected", [
    ((3, 1, 1), (3, 1, 1)),
    ((4,), (1, 1, 1, 1)),
    ((3, 2), (2, 2, 1)),
    ((), ()),
])
def test_conjugate_examples(lam, expected):
    assert conjugate(lam) == expected


def test_hooks_and_squares():
    assert gamma_hook(1) == (1,)
    assert gamma_hook(3) == (3, 1, 1)
    assert all(is_self_conjugate(gamma_hook(j)) for j in range(1, 8))
    assert square_partition(0) == ()
    assert square_partition(3) == (3, 3, 3)
    with pytest.raises(ValueError):
        gamma_hook(0)


def test_enumeration_is_ordered_and_complete():
    parts = enumerate_partitions(5)
    assert parts[0] == (5,) and parts[-1] == (1, 1, 1, 1, 1)
    assert parts == sorted(parts, reverse=True)
    assert len(set(parts)) == len(parts)
    assert enumerate_partitions(0) == [()]


@pytest.mark.parametrize("d", range(0, 21))
def test_counts_against_pentagonal_oracle(d):
    assert partition_count(d) == partition_number(d)
    assert count_self_conjugate(d) == distinct_odd_parts(d)


def test_self_conjugate_counts_frozen():
    # oracle output of distinct_odd_parts for d = 0..12
    assert [count_self_conjugate(d) for d in range(13)] == [1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3]


@given(st.integers(min_value=0, max_value=14).flatmap(
    lambda d: st.sampled_from(enumerate_partitions(d))))
def test_conjugation_is_an_involution(lam):
    mu = conjugate(lam)
    assert conjugate(mu) == lam
    assert mu.size == lam.size
    assert {(c, r) for r, c in lam.cells()} == mu.cells()


def test_border_strip_predicate():
    assert is_border_strip(Partition([2, 1]), Partition())
    assert not is_border_strip(Partition([2, 1]), Partition([1]))     # corner-touching only
    assert not is_border_strip(Partition([2, 2]), Partition())       # 2x2 block
    assert not is_border_strip(Partition([2, 1]), Partition([1, 1, 1]))  # not contained
    assert not is_border_strip(Partition([3, 1]), Partition([2]))    # disconnected
    assert not is_border_strip(Partition([1]), Partition([1]))        # empty


def test_border_strip_additions_examples():
    assert sorted(border_strip_additions(Partition(), 3)) == [(1, 1, 1), (2, 1), (3,)]
    assert sorted(border_strip_additions(Partition([1]), 2)) == [(1, 1, 1), (3,)]
    # adding a 5-strip to the 2x2 square: exactly one self-conjugate result
    got = border_strip_additions(square_partition(2), 5)
    assert [mu for mu in got if is_self_conjugate(mu)] == [(3, 3, 3)]
    with pytest.raises(ValueError):
        border_strip_additions(Partition([1]), 0)


def _strip_count_by_hooks(lam: Partition, k: int) -> int:
    """Border strips of size k added to lam correspond to removable k-hooks of the result;
    count via beta-numbers: positions b in the beta-set with b + k free."""
    n = len(lam) + k
    parts = list(lam) + [0] * (n - len(lam))
    beta = {parts[i] + n - 1 - i for i in range(n)}
    return sum(1 for b in beta if b + k not in beta)


@given(st.integers(min_value=0, max_value=9).flatmap(
    lambda d: st.sampled_from(enumerate_partitions(d))), st.integers(min_value=1, max_value=5))
def test_border_strip_count_matches_abacus(lam, k):
    assert len(border_strip_additions(lam, k)) == _strip_count_by_hooks(lam, k)


@given(st.integers(min_value=0, max_value=8).flatmap(
    lambda d: st.sampled_from(enumerate_partitions(d))), st.integers(min_value=1, max_value=5))
def test_border_strip_sizes_and_shape(lam, k):
    for mu in border_strip_additions(lam, k):
        assert mu.size == lam.size + k
        skew = mu.cells() - lam.cells()
        # independent check: rows of the strip are intervals and consecutive rows overlap in one column
        rows = sorted({r for r, _ in skew})
        assert rows == list(range(rows[0], rows[-1] + 1))
        spans = {r: sorted(c for rr, c in skew if rr == r) for r in rows}
        for r in rows:
            cols = spans[r]
            assert cols == list(range(cols[0], cols[-1] + 1))
        for r in rows[:-1]:
            assert spans[r][0] == spans[r + 1][-1]
