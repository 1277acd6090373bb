"""Named verification suites.  Each returns a list of ``{check, pass, details}`` records."""

from __future__ import annotations

import math
from typing import Callable

from .core import PopulationVector, Problem, Row, iter_populations
from .enumeration import oracle_count, weak_compositions
from .exact import binomial, multiset_coefficient
from .formulas import count, count_column0, count_column00, count_via_column0_sum
from .oeis import compare, load_bfile
from .sequences import (
    check_col10_sums,
    check_recurrence_b9,
    check_recurrence_d6,
    closed_form_checks,
    registry,
    search_motifs,
    sequence_id,
    sequence_terms,
)
from .symmetry import verify_quotient_listings, verify_quotients


def _rec(check: str, ok: bool, **details) -> dict:
    return {"check": check, "pass": bool(ok), "details": details}


def oracle(max_m: int = 6, max_b: int = 6) -> list[dict]:
    """Closed form = brute-force listing, cell by cell."""
    out = []
    for row in Row:
        for col in ("1", "2", "3"):
            for m in range(1, max_m + 1):
                for b in range(1, max_b + 1):
                    p = Problem(row, col, m, b)
                    f, o = count(p), oracle_count(p)
                    out.append(_rec(f"oracle {row.value}{col}", f == o, m=m, b=b, formula=f, listed=o))
        for m in range(1, max_m + 1):
            p = Problem(row, "4", m)
            f, o = count(p), oracle_count(p)
            out.append(_rec(f"oracle {row.value}4", f == o, m=m, formula=f, listed=o))
        for m in range(max_m + 1):
            for a in iter_populations(m, max_b=max_b):
                p = Problem(row, "0", alpha=a)
                f, o = count(p), oracle_count(p)
                out.append(_rec(f"oracle {row.value}0", f == o, alpha=list(a.a), formula=f, listed=o))
        if row.serial:
            for m in range(max_m + 1):
                for b in range(max_b + 1):
                    for mu in weak_compositions(m, b):
                        p = Problem(row, "00", mu=mu)
                        f, o = count(p), oracle_count(p)
                        out.append(_rec(f"oracle {row.value}00", f == o, mu=list(mu), formula=f, listed=o))
    return out


def quotients(max_m: int = 5, max_b: int | None = None) -> list[dict]:
    out = verify_quotients(min(max_m, 5), max_b=max_b)
    out += verify_quotient_listings(min(max_m, 5))
    return out


def summations(max_m: int = 7, max_b: int = 7) -> list[dict]:
    out = []
    for row in Row:
        for m in range(1, max_m + 1):
            c4 = count(Problem(row, "4", m))
            s = sum(count(Problem(row, "3", m, b)) for b in range(1, m + 1))
            out.append(_rec(f"summation (a) {row.value}", c4 == s, m=m, column4=c4, sum=s))
            out.append(_rec(f"summation (c) {row.value}4", c4 == count_via_column0_sum(Problem(row, "4", m)), m=m))
            for b in range(1, max_b + 1):
                if not row.serial:
                    c2 = count(Problem(row, "2", m, b))
                    s = sum(count(Problem(row, "3", m, d)) for d in range(1, b + 1))
                    out.append(_rec(f"summation (b) {row.value}", c2 == s, m=m, b=b, column2=c2, sum=s))
                for col in ("2", "3"):
                    p = Problem(row, col, m, b)
                    out.append(_rec(f"summation (c) {row.value}{col}", count(p) == count_via_column0_sum(p),
                                    m=m, b=b))
    return out


def equalities(max_m: int = 7, max_b: int = 7) -> list[dict]:
    out = []
    for m in range(1, max_m + 1):
        for b in range(1, max_b + 1):
            c1 = {row: count(Problem(row, "1", m, b)) for row in Row}
            c3 = {row: count(Problem(row, "3", m, b)) for row in Row}
            out.append(_rec("equality (c) A1 = B1", c1[Row.A] == c1[Row.B], m=m, b=b))
            out.append(_rec("equality (c) D1 = E1", c1[Row.D] == c1[Row.E], m=m, b=b))
            if b >= m:
                alpha = [b - m, m] + [0] * (m - 1)
                for row in Row:
                    c0 = count_column0(row, alpha)
                    out.append(_rec(f"equality (a) {row.value}1", c1[row] == c0, m=m, b=b))
                for row in (Row.D, Row.E, Row.F):
                    c2, c4 = count(Problem(row, "2", m, b)), count(Problem(row, "4", m))
                    out.append(_rec(f"equality (b) {row.value}", c2 == c4, m=m, b=b))
            else:
                out.append(_rec("column 1' zero outside b >= m", all(v == 0 for v in c1.values()), m=m, b=b))
            if b > m:
                out.append(_rec("column 3' zero outside b <= m", all(v == 0 for v in c3.values()), m=m, b=b))
            else:
                ok = binomial(m - 1, b - 1) == multiset_coefficient(b, m - b)
                out.append(_rec("C(m-1,b-1) = ((b choose m-b))", ok, m=m, b=b))
            if m <= 6 and b <= 6:
                top = count(Problem(Row.A, "2", m, b))
                ok = all(count(Problem(row, col, m, b)) <= top for row in Row for col in ("1", "2", "3"))
                out.append(_rec("dominance by A2", ok, m=m, b=b, A2=top))
    # Column 00 refines Column 0 by the (b choose alpha) orderings
    for m in range(max_m + 1):
        for b in range(min(max_b, 6) + 1):
            for mu in weak_compositions(m, b):
                a = PopulationVector.from_sizes(mu, b)
                seq_orders = math.factorial(a.b) // a.alpha_factorial
                for row in (Row.A, Row.B, Row.C):
                    ok = count_column0(row, a) == seq_orders * count_column00(row, mu)
                    out.append(_rec(f"column 00 refines {row.value}0", ok, mu=list(mu)))
    out += edge_conventions()
    return out


def edge_conventions(max_small: int = 3) -> list[dict]:
    """The m = 0 / b = 0 matrix."""
    out = []
    for row in Row:
        for m in range(max_small + 1):
            for b in range(max_small + 1):
                if m and b:
                    continue
                for col in ("1", "2", "3"):
                    if m == 0 and b == 0:
                        want = 1
                    elif m == 0:
                        want = 0 if col == "3" else 1
                    else:
                        want = 0
                    got = count(Problem(row, col, m, b))
                    out.append(_rec(f"edge {row.value}{col}", got == want, m=m, b=b, got=got, expected=want))
                if m == 0:
                    got = count(Problem(row, "0", alpha=(b,)))
                    out.append(_rec(f"edge {row.value}0", got == 1, m=0, b=b, got=got, expected=1))
        got = count(Problem(row, "4", 0))
        out.append(_rec(f"edge {row.value}4", got == 1, m=0, got=got, expected=1))
    return out


def sequences(terms: int = 9, oracle_terms: int = 6) -> list[dict]:
    out = closed_form_checks()
    for sid in registry():
        seq = sequence_terms(sid, max(terms, oracle_terms)).terms
        listed = [oracle_count(sid.problem(i)) for i in range(oracle_terms)]
        out.append(_rec(f"sequence {sid.name} listing", list(seq[:oracle_terms]) == listed,
                        terms=list(seq[:oracle_terms]), listed=listed))
    catalan = search_motifs([132, 429])
    out.append(_rec("Catalan 132, 429 absent", not catalan, hits=catalan))
    fib = search_motifs([13, 21])
    names13 = {h["sequence"] for h in fib if h["value"] == 13}
    names21 = {h["sequence"] for h in fib if h["value"] == 21}
    out.append(_rec("Fibonacci 13 present in C5 and C6", {"C5", "C6"} <= names13, hits=sorted(names13)))
    out.append(_rec("Fibonacci 21 present in C6", "C6" in names21, hits=sorted(names21)))
    return out


def recurrences(d6_max: int = 15, b9_max: int = 8) -> list[dict]:
    d6 = sequence_terms(sequence_id("D", "6"), d6_max + 1)
    b9 = sequence_terms(sequence_id("B", "9"), b9_max + 1)
    return [
        _rec("D6 recurrence", check_recurrence_d6(d6), m_max=d6_max),
        _rec("B9 recurrence and trinomial sum", check_recurrence_b9(b9), b_max=b9_max),
        _rec("A10/D10/E10 Column-0 sums", check_col10_sums(8), b_max=8),
    ]


def oeis(terms: int = 12, min_match: int = 9, *, offline: bool = True, cache=None) -> list[dict]:
    out = []
    for sid in registry():
        seq = sequence_terms(sid, terms)
        res = compare(seq, load_bfile(sid.anum, cache=cache, offline=offline))
        ok = res.first_mismatch is None and res.matched_prefix_length >= min_match
        out.append(_rec(f"OEIS {sid.name} ~ {sid.anum}", ok, matched=res.matched_prefix_length,
                        shift=res.offset_used, first_mismatch=res.first_mismatch))
    return out


SUITES: dict[str, Callable[..., list[dict]]] = {
    "oracle": oracle,
    "quotients": quotients,
    "summations": summations,
    "equalities": equalities,
    "sequences": sequences,
    "recurrences": recurrences,
    "oeis": oeis,
}
