"""Closed-form answers for every cell, and the Column-0 summation engine.

Two independent routes to each count:

* :func:`count` evaluates the closed forms (Columns 1-4, plus the few
  closed forms known for Columns 5-10).
* :func:`count_via_column0_sum` adds Column-0 counts over every admissible
  population vector.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

from .core import (
    M_COLUMNS,
    SIZE_BOUNDS,
    PopulationVector,
    Problem,
    Row,
    iter_populations,
)
from .exact import (
    binomial,
    falling_factorial,
    fibonacci,
    multinomial,
    multiset_coefficient,
    rising_factorial,
    stirling2,
)
from .series import partition_gf_coefficient

__all__ = [
    "Problem",
    "count",
    "count_column0",
    "count_column00",
    "count_via_column0_sum",
    "admissible_populations",
    "bell",
    "partitions",
]


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    assert r == 0, f"inexact division {num}/{den}"
    return q


def count_column0(row: Row | str, alpha: PopulationVector | Sequence[int]) -> int:
    """Assemblages whose batches have exactly the population ``alpha``."""
    row = Row.parse(row)
    if not isinstance(alpha, PopulationVector):
        alpha = PopulationVector(tuple(alpha))
    m, b = alpha.m, alpha.b
    seq_orders = _exact_div(math.factorial(b), alpha.alpha_factorial)  # (b choose alpha)
    fill = _exact_div(math.factorial(m), alpha.iota_factorial)  # (m choose iota)
    if row is Row.A:
        return seq_orders * math.factorial(m)
    if row is Row.B:
        return seq_orders * fill
    if row is Row.C:
        return seq_orders
    if row is Row.D:
        return _exact_div(math.factorial(m), alpha.aplus_factorial)
    if row is Row.E:
        return _exact_div(fill, alpha.aplus_factorial)
    return 1


def count_column00(row: Row | str, mu: Sequence[int]) -> int:
    """Part I assemblages whose i-th batch holds exactly ``mu[i]`` items."""
    row = Row.parse(row)
    if not row.serial:
        raise ValueError("column 00 is only defined for rows A, B, C")
    mu = [int(x) for x in mu]
    if any(x < 0 for x in mu):
        raise ValueError(f"negative batch size in mu={mu}")
    m = sum(mu)
    if row is Row.A:
        return math.factorial(m)
    if row is Row.B:
        return multinomial(m, mu)
    return 1


def partitions(m: int) -> int:
    """``p(m)`` as the sum of ``p(m, b)``."""
    if m == 0:
        return 1
    return sum(partition_gf_coefficient(m, b) for b in range(1, m + 1))


def bell(m: int) -> int:
    """``B(m)`` as the sum of ``S(m, b)``."""
    if m == 0:
        return 1
    return sum(stirling2(m, b) for b in range(1, m + 1))


def _two_param(row: Row, col: str, m: int, b: int) -> int:
    # conventions for m = 0 and/or b = 0
    if m == 0:
        if col == "3":
            return 1 if b == 0 else 0
        return 1
    if b == 0:
        return 0
    if col == "1":
        if row in (Row.A, Row.B):
            return falling_factorial(b, m)
        if row is Row.C:
            return binomial(b, m)
        return 1 if b >= m else 0
    if col == "2":
        if row is Row.A:
            return rising_factorial(b, m)
        if row is Row.B:
            return b ** m
        if row is Row.C:
            return multiset_coefficient(b, m)
        return sum(_two_param(row, "3", m, d) for d in range(1, b + 1))
    # column 3
    if b > m:
        return 0
    if row is Row.A:
        return binomial(m - 1, b - 1) * math.factorial(m)
    if row is Row.B:
        return math.factorial(b) * stirling2(m, b)
    if row is Row.C:
        return binomial(m - 1, b - 1)
    if row is Row.D:
        return _exact_div(math.factorial(m), math.factorial(b)) * binomial(m - 1, b - 1)
    if row is Row.E:
        return stirling2(m, b)
    return partition_gf_coefficient(m, b)


def _column4(row: Row, m: int) -> int:
    if m == 0:
        return 1
    if row is Row.A:
        return 2 ** (m - 1) * math.factorial(m)
    if row is Row.C:
        return 2 ** (m - 1)
    if row is Row.E:
        return bell(m)
    if row is Row.F:
        return partitions(m)
    return sum(_two_param(row, "3", m, b) for b in range(1, m + 1))


def _closed_one_param(row: Row, col: str, n: int) -> int | None:
    """Closed forms known for Columns 5-10; ``None`` where only the sum is known."""
    if col == "5" and row is Row.C:
        return 1 if n == 0 else fibonacci(n - 1)
    if col == "6" and row is Row.C:
        return fibonacci(n + 1)
    if col == "7" and row in (Row.C, Row.F):
        return 1
    if col == "8":
        if row in (Row.A, Row.B):
            return sum(falling_factorial(n, k) for k in range(n + 1))
        if row is Row.C:
            return 2 ** n
        return n + 1
    if col == "9" and row is Row.F:
        return math.comb(n + 2, 2)
    return None


def count(problem: Problem) -> int:
    """Exact count of the assemblages of ``problem``."""
    row, col = problem.row, problem.column
    if col == "0":
        return count_column0(row, problem.alpha)
    if col == "00":
        return count_column00(row, problem.mu)
    if col in ("1", "2", "3"):
        return _two_param(row, col, problem.m, problem.b)
    if col == "4":
        return _column4(row, problem.m)
    n = problem.m if col in M_COLUMNS else problem.b
    closed = _closed_one_param(row, col, n)
    if closed is not None:
        return closed
    return count_via_column0_sum(problem)


def admissible_populations(problem: Problem) -> Iterator[PopulationVector]:
    """Population vectors whose Column-0 counts add up to ``problem``'s count."""
    col = problem.column
    if col in ("0", "00"):
        raise ValueError("column 0/00 cells are not sums over populations")
    if col == "1":
        m, b = problem.m, problem.b
        if b >= m:
            yield PopulationVector((b - m, m) if m else (b,))
        return
    if col == "2":
        yield from iter_populations(problem.m, b=problem.b)
        return
    if col == "3":
        yield from iter_populations(problem.m, b=problem.b, lo=1)
        return
    lo, hi = SIZE_BOUNDS[col]
    if col in M_COLUMNS:
        yield from iter_populations(problem.m, lo=max(lo, 1), hi=hi)
        return
    b = problem.b
    for m in range(lo * b, hi * b + 1):
        if lo == 0:
            yield from iter_populations(m, b=b, hi=hi)
        else:
            yield from iter_populations(m, b=b, lo=lo, hi=hi)


def count_via_column0_sum(problem: Problem) -> int:
    """Sum of Column-0 counts over :func:`admissible_populations`."""
    return sum(count_column0(problem.row, a) for a in admissible_populations(problem))
