"""Exact combinatorial number families.

Factorials, binomial coefficients, Stirling numbers of the second kind,
Bernoulli numbers and poly-Bernoulli numbers, all computed exactly:
integers are plain ints, rationals are fractions.Fraction.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction

__all__ = [
    "factorial",
    "binomial",
    "stirling2",
    "bernoulli",
    "poly_bernoulli",
]


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError("factorial is undefined for negative n")
    return math.factorial(n)


def binomial(n: int, m: int) -> int:
    """Binomial coefficient C(n, m); zero outside 0 <= m <= n."""
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    if m < 0 or m > n:
        return 0
    return math.comb(n, m)


# Triangle of S(n, m), grown on demand and kept for the session.  Rows are
# appended whole, so a concurrent reader only ever sees finished rows.
_stirling_rows: list[list[int]] = [[1]]
_stirling_lock = threading.Lock()


def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind S(n, m).

    Counts partitions of an n-set into m nonempty blocks; S(0,0) = 1 and
    S(n, m) = 0 for m > n.  Computed by the recurrence
    S(n, m) = m*S(n-1, m) + S(n-1, m-1).
    """
    if n < 0 or m < 0:
        raise ValueError("stirling2 needs n, m >= 0")
    if m > n:
        return 0
    if n >= len(_stirling_rows):
        with _stirling_lock:
            while len(_stirling_rows) <= n:
                prev = _stirling_rows[-1]
                i = len(_stirling_rows)
                row = [0] * (i + 1)
                for j in range(1, i):
                    row[j] = j * prev[j] + prev[j - 1]
                row[i] = 1
                _stirling_rows.append(row)
    return _stirling_rows[n][m]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n under the x*e^x/(e^x - 1) convention (B_1 = +1/2).

    Evaluates the explicit sum over Stirling numbers,
    B_n = sum_{m=0..n} (-1)^(m+n) m! S(n, m)/(m+1); the generating
    function itself serves as an independent cross-check in the tests.
    """
    if n < 0:
        raise ValueError("bernoulli needs n >= 0")
    total = Fraction(0)
    for m in range(n + 1):
        term = Fraction(factorial(m) * stirling2(n, m), m + 1)
        total += term if (m + n) % 2 == 0 else -term
    return total


def poly_bernoulli(n: int, k: int) -> int:
    """Poly-Bernoulli number B_n^(-k).

    B_n^(-k) = sum_{m=0..min(n,k)} (m!)^2 S(n+1, m+1) S(k+1, m+1), a
    nonnegative integer; it counts the k x n lonesum matrices.
    """
    if n < 0 or k < 0:
        raise ValueError("poly_bernoulli needs n, k >= 0")
    return sum(
        factorial(m) ** 2 * stirling2(n + 1, m + 1) * stirling2(k + 1, m + 1)
        for m in range(min(n, k) + 1)
    )
