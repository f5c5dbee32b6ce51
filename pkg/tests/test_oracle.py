"""Tests for the brute-force oracles themselves."""

import pytest

from hermgrass.codec import LineCode
from hermgrass.gf import GF
from hermgrass.geometry import (is_isotropic_line, is_isotropic_point,
                                is_rref_pair, num_lines, num_points)
from hermgrass.oracle import (GuardError, OracleReport, all_lines_brute,
                              all_points_brute, generator_matrix,
                              min_distance_brute, selftest)

F4 = GF(2, 1)


def test_point_list_properties():
    points = all_points_brute(F4, 5)
    assert len(points) == num_points(2, 5) == 165
    assert len(set(points)) == 165
    assert points == sorted(points)
    assert all(is_isotropic_point(F4, p) for p in points)


def test_line_list_properties():
    lines = all_lines_brute(F4, 5)
    assert len(lines) == num_lines(2, 5) == 297
    assert len(set(lines)) == 297
    assert all(is_rref_pair(A, B) for A, B in lines)
    assert all(is_isotropic_line(F4, A, B) for A, B in lines)
    # column-lexicographic order
    keys = [tuple(x for col in zip(A, B) for x in col) for A, B in lines]
    assert keys == sorted(keys)


def test_enum_guard():
    with pytest.raises(GuardError):
        all_points_brute(GF(2, 2), 10)


def test_generator_matrix_matches_encode():
    import random
    random.seed(2)
    F = F4
    gen = generator_matrix(F, 4)
    code = LineCode(F, 4)
    assert len(gen) == 6 and len(gen[0]) == 27
    for _ in range(10):
        w = [random.randrange(4) for _ in range(6)]
        by_matrix = [0] * 27
        for i, wi in enumerate(w):
            if wi:
                by_matrix = [F.add(acc, F.mul(wi, g))
                             for acc, g in zip(by_matrix, gen[i])]
        assert by_matrix == code.encode(w)


def test_min_distance_guard():
    with pytest.raises(GuardError):
        min_distance_brute(F4, 6)


def test_min_distance_small():
    assert min_distance_brute(F4, 4) == 12


def test_report_formatting():
    good = OracleReport("thing", 2, 4, 5, 5)
    bad = OracleReport("thing", 2, 4, 5, 6)
    assert good.agree and not bad.agree
    assert "agree" in str(good)
    assert "DISAGREE" in str(bad)
    long = OracleReport("lists", 2, 4, list(range(100)), list(range(100)))
    assert "<100 values>" in str(long)


def test_selftest_fast_all_agree():
    reports = selftest("fast")
    assert reports
    assert all(r.agree for r in reports)


def test_selftest_level_validation():
    with pytest.raises(ValueError):
        selftest("bogus")
