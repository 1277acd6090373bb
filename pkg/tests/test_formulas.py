import math

import pytest

from twelvefold.core import Problem, Row
from twelvefold.enumeration import oracle_count
from twelvefold.formulas import (
    bell,
    count,
    count_column0,
    count_column00,
    count_via_column0_sum,
    partitions,
)

TWO_PAIRS = (0, 0, 2, 0, 0)


def test_column0_examples():
    assert count_column0("B", TWO_PAIRS) == 6
    assert count_column0("E", TWO_PAIRS) == 3
    assert count_column0("A", TWO_PAIRS) == 24
    assert count_column0("F", (2, 1, 0, 1)) == 1


def test_equal_size_blocks_formula():
    # b unordered blocks of k items each: (bk)! / (b! (k!)^b)
    for b in range(1, 4):
        for k in range(1, 4):
            alpha = [0] * (b * k + 1)
            alpha[k] = b
            want = math.factorial(b * k) // (math.factorial(b) * math.factorial(k) ** b)
            assert count_column0("E", alpha) == want


def test_column00_examples():
    assert count_column00("B", (2, 2)) == 6
    assert count_column00("C", (5, 0, 1)) == 1
    assert count_column00("A", (1, 3)) == 24
    with pytest.raises(ValueError):
        count_column00("E", (1, 1))


@pytest.mark.parametrize("problem, want", [
    (Problem("E", "4", m=3), 5),
    (Problem("F", "4", m=5), 7),
    (Problem("E", "3", 3, 2), 3),
    (Problem("F", "3", 5, 2), 2),
    (Problem("B", "2", 2, 3), 9),
    (Problem("A", "2", 1, 1), 1),
    (Problem("B", "4", m=3), 13),
    (Problem("D", "4", m=3), 13),
    (Problem("C", "3", 5, 2), 4),
    (Problem("A", "1", 2, 2), 2),
])
def test_count_examples(problem, want):
    assert count(problem) == want


@pytest.mark.parametrize("problem, want", [
    (Problem("F", "3", 5, 2), 2),
    (Problem("C", "5", m=5), 3),
    (Problem("F", "9", b=3), 10),
    (Problem("C", "8", b=4), 16),
])
def test_column0_sum_examples(problem, want):
    assert count_via_column0_sum(problem) == want


def test_partitions_and_bell():
    assert [partitions(m) for m in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert [bell(m) for m in range(7)] == [1, 1, 2, 5, 15, 52, 203]


@pytest.mark.parametrize("row", list(Row))
def test_edge_conventions(row):
    for b in range(4):
        want = {"1": 1, "2": 1, "3": 1 if b == 0 else 0}
        for col, w in want.items():
            assert count(Problem(row, col, 0, b)) == w
    for m in range(1, 4):
        for col in ("1", "2", "3"):
            assert count(Problem(row, col, m, 0)) == 0
    assert count(Problem(row, "4", m=0)) == 1


@pytest.mark.parametrize("row", list(Row))
def test_two_paths_agree(row):
    for m in range(1, 8):
        for b in range(0, 8):
            for col in ("1", "2", "3"):
                p = Problem(row, col, m, b)
                assert count(p) == count_via_column0_sum(p), p
        assert count(Problem(row, "4", m)) == count_via_column0_sum(Problem(row, "4", m))


def test_dominance_by_a2():
    for m in range(1, 7):
        for b in range(1, 7):
            top = count(Problem("A", "2", m, b))
            assert all(count(Problem(r, c, m, b)) <= top for r in Row for c in ("1", "2", "3"))


@pytest.mark.parametrize("col", ["5", "6"])
@pytest.mark.parametrize("row", list(Row))
def test_one_param_m_columns_match_oracle(row, col):
    for m in range(7):
        p = Problem(row, col, m=m)
        assert count(p) == oracle_count(p), p


@pytest.mark.parametrize("col", ["7", "8", "9", "10"])
@pytest.mark.parametrize("row", list(Row))
def test_one_param_b_columns_match_oracle(row, col):
    for b in range(4):
        p = Problem(row, col, b=b)
        assert count(p) == oracle_count(p), p
