"""The 42 one-parameter sequences of Columns 4-10 and the checks run on them."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

import mpmath

from .core import B_COLUMNS, M_COLUMNS, PopulationVector, Problem, Row
from .enumeration import CapExceeded, oracle_count
from .exact import falling_factorial, fibonacci
from .formulas import count_column0, count_via_column0_sum, partitions
from .series import trinomial_weights

ONE_PARAM_COLUMNS = M_COLUMNS + B_COLUMNS
MAX_INDEX = 40


@dataclass(frozen=True)
class SequenceId:
    row: Row
    column: str
    anum: str

    @property
    def index_var(self) -> str:
        return "m" if self.column in M_COLUMNS else "b"

    @property
    def name(self) -> str:
        return f"{self.row.value}{self.column}"

    def problem(self, n: int) -> Problem:
        if self.index_var == "m":
            return Problem(self.row, self.column, m=n)
        return Problem(self.row, self.column, b=n)


@dataclass(frozen=True)
class SequenceTerms:
    id: SequenceId
    offset: int
    terms: tuple[int, ...]


@lru_cache(maxsize=None)
def registry() -> tuple[SequenceId, ...]:
    """The 42 (row, column, A-number) entries, read from the packaged table."""
    text = (resources.files("twelvefold") / "data" / "sequences.csv").read_text()
    out = []
    for rec in csv.DictReader(text.splitlines()):
        out.append(SequenceId(Row.parse(rec["row"]), rec["column"], rec["anum"]))
    return tuple(out)


def sequence_id(row: Row | str, column: str | int) -> SequenceId:
    row, column = Row.parse(row), str(column)
    for sid in registry():
        if sid.row is row and sid.column == column:
            return sid
    raise ValueError(f"no sequence for row {row.value} column {column}; columns 4-10 only")


def sequence_terms(sid: SequenceId, n: int, *, max_index: int = MAX_INDEX) -> SequenceTerms:
    """First ``n`` terms, index 0 upwards, each by Column-0 summation."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n - 1 > max_index:
        raise CapExceeded(f"{sid.name}: index {n - 1} is above the limit {max_index}")
    return SequenceTerms(sid, 0, tuple(count_via_column0_sum(sid.problem(i)) for i in range(n)))


def all_sequences(n: int = 9) -> list[SequenceTerms]:
    return [sequence_terms(sid, n) for sid in registry()]


def _require(terms: SequenceTerms, name: str, minimum: int) -> None:
    if terms.id.name != name:
        raise ValueError(f"expected the {name} sequence, got {terms.id.name}")
    if len(terms.terms) < minimum:
        raise ValueError(f"{name} check needs at least {minimum} terms, got {len(terms.terms)}")


def check_recurrence_d6(terms: SequenceTerms) -> bool:
    """``f_m = f_{m-1} + 2(m-1) f_{m-2}`` at every computed index."""
    _require(terms, "D6", 3)
    f = terms.terms
    return all(f[m] == f[m - 1] + 2 * (m - 1) * f[m - 2] for m in range(2, len(f)))


def b9_trinomial_sum(b: int) -> int:
    """``sum_{k<=2b} k! U_k`` with ``U_k = [x^k] (1 + x + x^2/2)^b``."""
    total = sum(math.factorial(k) * u for k, u in enumerate(trinomial_weights(b, 2 * b)))
    total = Fraction(total)
    assert total.denominator == 1
    return total.numerator


def check_recurrence_b9(terms: SequenceTerms) -> bool:
    """The cubic three-term recurrence, plus agreement with the trinomial sum."""
    _require(terms, "B9", 4)
    f = terms.terms
    for b in range(3, len(f)):
        rhs = ((2 * b**3 - b**2 + b + 1) * f[b - 1]
               + (-3 * b**3 + 4 * b**2 + 2 * b - 3) * f[b - 2]
               + (b**3 - 2 * b**2 - b + 2) * f[b - 3])
        if b * f[b] != rhs:
            return False
    return all(f[b] == b9_trinomial_sum(b) for b in range(len(f)))


def col10_alpha(b: int, i: int) -> PopulationVector:
    """``a_1 = b - i``, ``a_2 = i``."""
    m = b + i
    a = [0] * (m + 1)
    if m >= 1:
        a[1] = b - i
    if m >= 2:
        a[2] = i
    return PopulationVector(tuple(a))


def col10_sum(row: Row | str, b: int) -> int:
    return sum(count_column0(row, col10_alpha(b, i)) for i in range(b + 1))


def check_col10_sums(b_max: int = 8, *, oracle_b_max: int = 3) -> bool:
    """A10, D10, E10 equal their sums over ``a_1 = b-i, a_2 = i``.

    The sums are checked against the sequence terms, against the explicit
    single-sum forms, and against brute-force listing for small ``b``.
    """
    if b_max > 8:
        raise ValueError("b_max must be at most 8")
    explicit = {
        Row.A: lambda b: sum(math.comb(b, i) * math.factorial(b + i) for i in range(b + 1)),
        Row.D: lambda b: sum(math.factorial(b + i) // (math.factorial(i) * math.factorial(b - i))
                             for i in range(b + 1)),
        Row.E: lambda b: sum(math.factorial(b + i) // (math.factorial(i) * math.factorial(b - i) * 2**i)
                             for i in range(b + 1)),
    }
    for row, closed in explicit.items():
        terms = sequence_terms(sequence_id(row, "10"), b_max + 1).terms
        for b in range(b_max + 1):
            s = col10_sum(row, b)
            if s != terms[b] or s != closed(b):
                return False
            if b <= oracle_b_max and oracle_count(Problem(row, "10", b=b)) != s:
                return False
    return True


def search_motifs(needles: Iterable[int], *, m_max: int = 8, b_max: int = 8) -> list[dict]:
    """Every place a needle value occurs among the computed sequence terms."""
    needles = set(needles)
    if not needles:
        return []
    hits = []
    for sid in registry():
        top = m_max if sid.index_var == "m" else b_max
        for i, v in enumerate(sequence_terms(sid, top + 1).terms):
            if v in needles:
                hits.append({"sequence": sid.name, "anum": sid.anum, sid.index_var: i, "value": v})
    return hits


def hardy_ramanujan(m: int, dps: int = 30) -> mpmath.mpf:
    """``exp(pi sqrt(2m/3)) / (4 m sqrt 3)`` to ``dps`` digits."""
    if m < 1:
        raise ValueError("m must be positive")
    with mpmath.workdps(dps):
        return mpmath.exp(mpmath.pi * mpmath.sqrt(mpmath.mpf(2 * m) / 3)) / (4 * m * mpmath.sqrt(3))


def hardy_ramanujan_ratio(m: int) -> tuple[int, mpmath.mpf]:
    """``(p(m), HR(m))``; the ratio is left to the caller."""
    return partitions(m), hardy_ramanujan(m)


# -- closed forms ----------------------------------------------------------------

def closed_form_checks(*, fib_max: int = 20, col8_max: int = 10, f9_max: int = 12) -> list[dict]:
    """Compare Column-0 sums with the known closed forms; one record per check."""
    def rec(check, ok, **details):
        return {"check": check, "pass": bool(ok), "details": details}

    out = []
    c5 = sequence_terms(sequence_id("C", "5"), fib_max + 1).terms
    c6 = sequence_terms(sequence_id("C", "6"), fib_max + 1).terms
    out.append(rec("C5 = F(m-1)", all(c5[m] == fibonacci(m - 1) for m in range(1, fib_max + 1)),
                   m_max=fib_max))
    out.append(rec("C6 = F(m+1)", all(c6[m] == fibonacci(m + 1) for m in range(fib_max + 1)),
                   m_max=fib_max))
    n8 = col8_max + 1
    col8 = {r: sequence_terms(sequence_id(r, "8"), n8).terms for r in Row}
    out.append(rec("C8 = 2^b", all(col8[Row.C][b] == 2**b for b in range(n8)), b_max=col8_max))
    for r in (Row.D, Row.E, Row.F):
        out.append(rec(f"{r.value}8 = b+1", all(col8[r][b] == b + 1 for b in range(n8)), b_max=col8_max))
    for r in (Row.A, Row.B):
        ok = all(col8[r][b] == sum(falling_factorial(b, k) for k in range(b + 1)) for b in range(n8))
        out.append(rec(f"{r.value}8 = sum b_(m)", ok, b_max=col8_max))
    f9 = sequence_terms(sequence_id("F", "9"), f9_max + 1).terms
    out.append(rec("F9 = C(b+2,2)", all(f9[b] == math.comb(b + 2, 2) for b in range(f9_max + 1)),
                   b_max=f9_max))
    b7 = sequence_terms(sequence_id("B", "7"), 11).terms
    out.append(rec("B7 = (2b)!/2^b", all(b7[b] == math.factorial(2 * b) // 2**b for b in range(11)),
                   b_max=10))
    return out


def terms_table(seqs: Sequence[SequenceTerms]) -> dict[str, list[int]]:
    return {s.id.name: list(s.terms) for s in seqs}
