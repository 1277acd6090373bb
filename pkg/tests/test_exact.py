import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twelvefold.exact import (
    binomial,
    factorial,
    falling_factorial,
    fibonacci,
    lah_count,
    multinomial,
    multiset_coefficient,
    rising_factorial,
    stirling2,
)


def product(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def test_factorial():
    assert [factorial(n) for n in (0, 3, 5)] == [1, 6, 120]
    with pytest.raises(ValueError):
        factorial(-1)


def test_falling_and_rising():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(7, 0) == 1
    assert falling_factorial(3, 5) == 0
    assert rising_factorial(2, 3) == 24
    assert rising_factorial(-4, 0) == 1
    assert rising_factorial(1, 6) == 720


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(9, 0) == 1
    assert binomial(-3, 2) == 6
    assert binomial(3, 5) == 0


def test_multiset_coefficient():
    assert multiset_coefficient(4, 9) == 220
    assert multiset_coefficient(7, 0) == 1
    assert multiset_coefficient(1, 8) == 1
    assert multiset_coefficient(0, 0) == 1 and multiset_coefficient(0, 2) == 0


def test_multinomial():
    assert multinomial(2, [0, 2]) == 1
    assert multinomial(4, [2, 2]) == 6
    assert multinomial(5, [5]) == 1
    with pytest.raises(ValueError):
        multinomial(4, [1, 2])


def test_stirling2():
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert all(stirling2(m, 1) == 1 for m in range(1, 10))
    assert stirling2(0, 0) == 1 and stirling2(3, 0) == 0 and stirling2(2, 5) == 0


def test_lah_count():
    assert lah_count(3, 2) == 6
    assert all(lah_count(m, m) == 1 for m in range(1, 8))
    assert lah_count(4, 1) == 24
    assert lah_count(2, 3) == 0


def test_fibonacci():
    assert [fibonacci(n) for n in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]


@given(st.integers(-30, 30), st.integers(0, 12))
def test_rising_is_shifted_falling(z, k):
    assert rising_factorial(z, k) == falling_factorial(z + k - 1, k)


@given(st.integers(-30, 30), st.integers(0, 12))
def test_falling_is_direct_product(z, k):
    assert falling_factorial(z, k) == product(z - i for i in range(k))


@given(st.integers(0, 10), st.integers(0, 10))
def test_binomial_reciprocity(n, k):
    assert binomial(-n, k) == (-1) ** k * multiset_coefficient(n, k)


@given(st.integers(0, 40), st.integers(0, 40))
def test_binomial_matches_math_comb(n, k):
    assert binomial(n, k) == math.comb(n, k)


@given(st.lists(st.integers(0, 6), max_size=5), st.randoms())
def test_multinomial_permutation_invariant(parts, rnd):
    n = sum(parts)
    shuffled = parts[:]
    rnd.shuffle(shuffled)
    assert multinomial(n, parts) == multinomial(n, shuffled)


@given(st.integers(1, 25), st.integers(1, 25))
def test_stirling2_recurrence(m, b):
    assert stirling2(m, b) == b * stirling2(m - 1, b) + stirling2(m - 1, b - 1)


@given(st.integers(1, 15), st.integers(1, 15))
def test_lah_closed_form(m, b):
    want = math.factorial(m) * math.comb(m - 1, b - 1) // math.factorial(b) if b <= m else 0
    assert lah_count(m, b) == want
