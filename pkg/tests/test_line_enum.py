"""Tests for totally isotropic line prefix counting and rank/unrank."""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hermgrass.gf import GF
from hermgrass.geometry import num_lines
from hermgrass.line_enum import (count_lines_with_prefix, line_rank,
                                 line_unrank)
from hermgrass.oracle import all_lines_brute, count_lines_with_prefix_brute

F4 = GF(2, 1)
F9 = GF(3, 1)


def test_known_prefix_counts():
    assert count_lines_with_prefix(F4, 5, (), ()) == 297
    assert count_lines_with_prefix(F4, 5, (0, 0), (0, 0)) == 3
    assert count_lines_with_prefix(F4, 5, (0, 1), (0, 0)) == 24


def test_infeasible_prefixes_count_zero():
    assert count_lines_with_prefix(F4, 5, (2,), (0,)) == 0  # pivot not 1
    assert count_lines_with_prefix(F4, 5, (0,), (1,)) == 0  # pivot order
    assert count_lines_with_prefix(F4, 5, (1, 1), (0, 1)) == 0  # above pivot
    assert count_lines_with_prefix(F4, 5, (1, 0), (0, 2)) == 0


def test_prefix_counts_match_oracle():
    for F, m in [(F4, 4), (F4, 5)]:
        lines = all_lines_brute(F, m)
        # realizable prefixes: every column prefix of every line
        seen = set()
        for A, B in lines:
            for t in range(m + 1):
                seen.add((A[:t], B[:t]))
        for A, B in seen:
            assert (count_lines_with_prefix(F, m, A, B)
                    == count_lines_with_prefix_brute(F, m, A, B,
                                                     lines)), (m, A, B)
        # short prefixes exhaustively, including unrealizable ones
        for t in range(3):
            for cols in product(range(F.order), repeat=2 * t):
                A, B = cols[:t], cols[t:]
                assert (count_lines_with_prefix(F, m, A, B)
                        == count_lines_with_prefix_brute(F, m, A, B,
                                                         lines)), (m, A, B)


def test_prefix_sum_consistency():
    F, m = F4, 5
    lines = all_lines_brute(F, m)
    prefixes = {(A[:t], B[:t]) for A, B in lines for t in range(m)}
    for A, B in prefixes:
        total = sum(count_lines_with_prefix(F, m, A + (a,), B + (b,))
                    for a in range(F.order) for b in range(F.order))
        assert total == count_lines_with_prefix(F, m, A, B)


def test_prefix_validation():
    with pytest.raises(ValueError):
        count_lines_with_prefix(F4, 5, (0, 1), (0,))
    with pytest.raises(ValueError):
        count_lines_with_prefix(F4, 3, (0,) * 4, (0,) * 4)


@pytest.mark.parametrize("F,m", [(F4, 4), (F4, 5), (F9, 4)])
def test_rank_unrank_bijection(F, m):
    lines = all_lines_brute(F, m)
    assert len(lines) == num_lines(F.q, m)
    for i, (A, B) in enumerate(lines):
        assert line_unrank(F, m, i) == (A, B)
        assert line_rank(F, m, A, B) == i


def test_rank_validation():
    with pytest.raises(ValueError):
        line_rank(F4, 5, (0, 1, 0), (0, 0, 1))  # wrong length
    with pytest.raises(ValueError):
        line_rank(F4, 5, (2, 0, 0, 0, 0), (0, 1, 0, 0, 0))  # not RREF
    with pytest.raises(ValueError):
        # RREF but spans a non-isotropic plane
        line_rank(F4, 5, (1, 0, 0, 0, 0), (0, 1, 0, 0, 0))
    with pytest.raises(ValueError):
        line_unrank(F4, 5, 297)


def test_even_dimension_ranks_are_initial_segment():
    F, m = F4, 4
    for i in range(num_lines(F.q, m)):
        A, B = line_unrank(F, m, i)
        assert line_unrank(F, m + 1, i) == ((0,) + A, (0,) + B)


def test_full_round_trip_m6():
    F, m = F4, 6
    n = num_lines(F.q, m)
    for i in range(0, n, 97):
        A, B = line_unrank(F, m, i)
        assert line_rank(F, m, A, B) == i


@settings(max_examples=40, deadline=None)
@given(st.integers(0, num_lines(2, 7) - 1))
def test_round_trip_at_larger_dimension(i):
    A, B = line_unrank(F4, 7, i)
    assert line_rank(F4, 7, A, B) == i
