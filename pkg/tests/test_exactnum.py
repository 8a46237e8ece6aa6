import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matrixavoid.exactnum import (
    bernoulli,
    binomial,
    factorial,
    poly_bernoulli,
    stirling2,
)

# Bell numbers, for the Stirling row-sum cross-check
BELL = (1, 1, 2, 5, 15, 52, 203, 877, 4140)


def test_factorial_matches_math():
    for n in range(12):
        assert factorial(n) == math.factorial(n)
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_values_and_edges():
    assert binomial(5, 2) == 10
    assert binomial(0, 0) == 1
    assert binomial(4, 7) == 0
    assert binomial(4, -1) == 0
    with pytest.raises(ValueError):
        binomial(-2, 1)


@given(st.integers(0, 40), st.integers(-5, 45))
def test_binomial_matches_comb(n, m):
    want = math.comb(n, m) if 0 <= m <= n else 0
    assert binomial(n, m) == want


def test_stirling2_known_values():
    assert stirling2(0, 0) == 1
    assert stirling2(4, 2) == 7
    assert stirling2(5, 3) == 25
    assert stirling2(7, 3) == 301
    for n in range(1, 8):
        assert stirling2(n, 0) == 0
        assert stirling2(n, 1) == 1
        assert stirling2(n, n) == 1
        assert stirling2(n, n + 1) == 0


def test_stirling2_row_sums_are_bell_numbers():
    for n, b in enumerate(BELL):
        assert sum(stirling2(n, m) for m in range(n + 1)) == b


@given(st.integers(1, 30), st.integers(1, 30))
def test_stirling2_recurrence(n, m):
    assert stirling2(n, m) == m * stirling2(n - 1, m) + stirling2(n - 1, m - 1)


def test_bernoulli_first_values():
    first = (
        Fraction(1),
        Fraction(1, 2),
        Fraction(1, 6),
        Fraction(0),
        Fraction(-1, 30),
        Fraction(0),
        Fraction(1, 42),
        Fraction(0),
        Fraction(-1, 30),
    )
    assert tuple(bernoulli(n) for n in range(9)) == first
    # odd indices beyond 1 all vanish
    for n in range(3, 16, 2):
        assert bernoulli(n) == 0


def test_poly_bernoulli_grid():
    # small grid frozen from the exhaustive enumerator
    grid = [
        [1, 1, 1, 1, 1],
        [1, 2, 4, 8, 16],
        [1, 4, 14, 46, 146],
        [1, 8, 46, 230, 1066],
        [1, 16, 146, 1066, 6902],
    ]
    for n in range(5):
        for k in range(5):
            assert poly_bernoulli(n, k) == grid[n][k]


@given(st.integers(0, 12), st.integers(0, 12))
def test_poly_bernoulli_symmetry(n, k):
    assert poly_bernoulli(n, k) == poly_bernoulli(k, n)


def test_poly_bernoulli_single_row():
    for n in range(10):
        assert poly_bernoulli(n, 1) == 2**n
