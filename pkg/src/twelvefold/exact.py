"""Exact integer combinatorial primitives.

All functions return Python ints; signed inputs are allowed where the
underlying polynomial identity makes sense (falling/rising factorials and
the generalised binomial).
"""

from __future__ import annotations

import math
from typing import Sequence


def _check_k(k: int) -> None:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def falling_factorial(z: int, k: int) -> int:
    """``z (z-1) ... (z-k+1)``; the empty product for ``k = 0``."""
    _check_k(k)
    out = 1
    for i in range(k):
        out *= z - i
    return out


def rising_factorial(z: int, k: int) -> int:
    """``z (z+1) ... (z+k-1)``."""
    _check_k(k)
    out = 1
    for i in range(k):
        out *= z + i
    return out


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    assert r == 0, f"inexact division {num}/{den}"
    return q


def binomial(z: int, k: int) -> int:
    """Generalised binomial ``z_(k) / k!`` for any integer ``z``."""
    _check_k(k)
    if z >= 0:
        return math.comb(z, k)
    return _exact_div(falling_factorial(z, k), math.factorial(k))


def multiset_coefficient(n: int, k: int) -> int:
    """Multisets of size ``k`` from ``n`` types: ``n^(k) / k!``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    _check_k(k)
    return _exact_div(rising_factorial(n, k), math.factorial(k))


def multinomial(n: int, parts: Sequence[int]) -> int:
    """``n! / prod(p!)``; the parts must sum to ``n``."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if sum(parts) != n:
        raise ValueError(f"parts {parts} sum to {sum(parts)}, not {n}")
    den = math.prod(math.factorial(p) for p in parts)
    return _exact_div(math.factorial(n), den)


def stirling2(m: int, b: int) -> int:
    """Set partitions of an ``m``-set into ``b`` blocks, by inclusion-exclusion."""
    if m < 0 or b < 0:
        raise ValueError("stirling2 needs m, b >= 0")
    if b > m:
        return 0
    total = sum((-1) ** i * math.comb(b, i) * (b - i) ** m for i in range(b + 1))
    return _exact_div(total, math.factorial(b))


def lah_count(m: int, b: int) -> int:
    """Partitions of an ``m``-set into ``b`` non-empty lists: ``(m!/b!) C(m-1, b-1)``."""
    if m < 1 or b < 1:
        raise ValueError("lah_count needs m >= 1 and b >= 1")
    if b > m:
        return 0
    return _exact_div(math.factorial(m), math.factorial(b)) * math.comb(m - 1, b - 1)


def fibonacci(n: int) -> int:
    """``F_n`` with ``F_0 = 0``, ``F_1 = 1``."""
    if n < 0:
        raise ValueError("fibonacci needs n >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a
