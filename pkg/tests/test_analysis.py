from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from buffercolour.analysis import (
    bipartite_online_bound,
    class_performance_ratio,
    crown_b2_mean,
    crown_b2_mean_printed,
    crown_b2_pmf,
    crown_b2_tail,
    iterated_log2,
    kneser_chromatic,
    performance_ratio,
)
from buffercolour.graph import GraphError


def test_pmf_examples():
    assert crown_b2_pmf(4) == {2: Fraction(1, 2), 3: Fraction(1, 4), 4: Fraction(1, 4)}
    assert crown_b2_pmf(2) == {2: 1}
    assert crown_b2_pmf(3) == {2: Fraction(1, 2), 3: Fraction(1, 2)}
    with pytest.raises(ValueError):
        crown_b2_pmf(1)


@pytest.mark.parametrize("n", range(2, 65))
def test_pmf_sums_to_one(n):
    assert sum(crown_b2_pmf(n).values()) == 1


def test_mean_examples():
    assert crown_b2_mean(2) == 2
    assert crown_b2_mean(4) == Fraction(11, 4)
    assert crown_b2_mean(3) == Fraction(5, 2)


def test_printed_mean_disagrees():
    assert crown_b2_mean_printed(2) == Fraction(11, 4)
    assert all(crown_b2_mean(n) != crown_b2_mean_printed(n) for n in range(2, 30))


@pytest.mark.parametrize("n", range(2, 21))
def test_tail_matches_pmf_partial_sums(n):
    pmf = crown_b2_pmf(n)
    for m in range(2, n + 1):
        assert crown_b2_tail(n, m) == sum(p for k, p in pmf.items() if k >= m)


def test_tail_examples_and_range():
    assert crown_b2_tail(5, 3) == Fraction(1, 2)
    assert crown_b2_tail(9, 2) == 1
    assert crown_b2_tail(4, 4) == Fraction(1, 4)
    with pytest.raises(ValueError):
        crown_b2_tail(4, 5)
    with pytest.raises(ValueError):
        crown_b2_tail(4, 1)


def test_kneser_chromatic():
    assert kneser_chromatic(5, 2) == 3
    assert kneser_chromatic(9, 1) == 9
    assert kneser_chromatic(7, 3) == 3
    assert kneser_chromatic(5, 3) == 1
    with pytest.raises(GraphError):
        kneser_chromatic(3, 4)


def test_performance_ratio():
    assert performance_ratio(10, 2) == 5
    assert performance_ratio(3, 3) == 1
    assert performance_ratio(4, 3) == Fraction(4, 3)
    with pytest.raises(ValueError):
        performance_ratio(1, 0)
    assert class_performance_ratio([(4, 2), (7, 2), (4, 3)]) == Fraction(7, 2)


def test_iterated_log2_examples():
    assert iterated_log2(1) == 0
    assert iterated_log2(2) == 1
    assert iterated_log2(16) == 3
    assert iterated_log2(65536) == 4
    assert iterated_log2(3) == 2
    assert bipartite_online_bound(65536) == 8
    with pytest.raises(ValueError):
        iterated_log2(0)


@given(st.integers(1, 10**12), st.integers(1, 10**12))
def test_iterated_log2_monotone(a, b):
    lo, hi = sorted((a, b))
    assert iterated_log2(lo) <= iterated_log2(hi)


@given(st.integers(1, 64))
def test_iterated_log2_power_of_two(m):
    assert iterated_log2(2**m) == 1 + iterated_log2(m)
