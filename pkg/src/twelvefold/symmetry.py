"""The three forgetful symmetries and the quotient relationships they induce.

* ``rho``   scatter the bins: sequence of batches -> collection (A->D, B->E, C->F)
* ``sigma`` unfilter lists: lists -> sets (A->B, D->E)
* ``tau``   paint the items black: sets -> bunches (B->C, E->F)
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from typing import Callable, Iterable, Sequence

from .core import (
    Assemblage,
    PopulationVector,
    Problem,
    Row,
    canonicalize,
    format_assemblage,
    iter_populations,
)
from .enumeration import DEFAULT_CAP, enumerate_assemblages, enumerate_by_quotient
from .formulas import count, count_column0


class SymmetryOp(str, enum.Enum):
    RHO = "rho"
    SIGMA = "sigma"
    TAU = "tau"

    @classmethod
    def parse(cls, value: "SymmetryOp | str") -> "SymmetryOp":
        if isinstance(value, SymmetryOp):
            return value
        aliases = {"ρ": "rho", "σ": "sigma", "τ": "tau"}
        try:
            return cls(aliases.get(value, str(value).lower()))
        except ValueError:
            raise ValueError(f"unknown symmetry {value!r}") from None


# the seven covering relations of the symmetry poset
EDGES: dict[tuple[Row, Row], SymmetryOp] = {
    (Row.A, Row.B): SymmetryOp.SIGMA,
    (Row.A, Row.D): SymmetryOp.RHO,
    (Row.B, Row.C): SymmetryOp.TAU,
    (Row.B, Row.E): SymmetryOp.RHO,
    (Row.D, Row.E): SymmetryOp.SIGMA,
    (Row.C, Row.F): SymmetryOp.RHO,
    (Row.E, Row.F): SymmetryOp.TAU,
}

_TARGET = {(src, op): dst for (src, dst), op in EDGES.items()}


def apply(op: SymmetryOp | str, x: Assemblage) -> Assemblage:
    """Image of ``x`` under one symmetry, in canonical form."""
    op = SymmetryOp.parse(op)
    dst = _TARGET.get((x.row, op))
    if dst is None:
        raise ValueError(f"symmetry {op.value} does not apply to row {x.row.value}")
    if op is SymmetryOp.TAU:
        return canonicalize(dst, x.sizes)
    return canonicalize(dst, x.batches)


def path_between(src: Row | str, dst: Row | str) -> tuple[SymmetryOp, ...]:
    """A shortest sequence of symmetries leading from ``src`` down to ``dst``."""
    src, dst = Row.parse(src), Row.parse(dst)
    frontier: list[tuple[Row, tuple[SymmetryOp, ...]]] = [(src, ())]
    seen = {src}
    while frontier:
        nxt = []
        for row, ops in frontier:
            if row is dst:
                return ops
            for (a, b), op in EDGES.items():
                if a is row and b not in seen:
                    seen.add(b)
                    nxt.append((b, ops + (op,)))
        frontier = nxt
    raise ValueError(f"row {dst.value} is not obtained from row {src.value} by the symmetries")


def apply_path(ops: Iterable[SymmetryOp | str], x: Assemblage) -> Assemblage:
    for op in ops:
        x = apply(op, x)
    return x


def relationships() -> list[tuple[Row, Row]]:
    """The twelve (source, target) pairs related by symmetries."""
    out = []
    for src in Row:
        for dst in Row:
            if src is dst:
                continue
            try:
                path_between(src, dst)
            except ValueError:
                continue
            out.append((src, dst))
    return out


def _falling_b(a: PopulationVector) -> int:
    return math.factorial(a.b) // math.factorial(a.a0)


def _m_over_iota(a: PopulationVector) -> int:
    return math.factorial(a.m) // a.iota_factorial


# Expected class size of each relationship within Column 0.
DIVISORS: dict[tuple[Row, Row], Callable[[PopulationVector], int]] = {
    (Row.A, Row.B): lambda a: a.iota_factorial,
    (Row.D, Row.E): lambda a: a.iota_factorial,
    (Row.A, Row.D): _falling_b,
    (Row.B, Row.E): _falling_b,
    (Row.C, Row.F): lambda a: _falling_b(a) // a.aplus_factorial,
    (Row.B, Row.C): _m_over_iota,
    (Row.E, Row.F): lambda a: _m_over_iota(a) // a.aplus_factorial,
    (Row.A, Row.C): lambda a: math.factorial(a.m),
    (Row.A, Row.E): lambda a: _falling_b(a) * a.iota_factorial,
    (Row.A, Row.F): lambda a: _falling_b(a) // a.aplus_factorial * math.factorial(a.m),
    (Row.B, Row.F): lambda a: _falling_b(a) // a.aplus_factorial * _m_over_iota(a),
    (Row.D, Row.F): lambda a: math.factorial(a.m) // a.aplus_factorial,
}


def class_sizes(ops: SymmetryOp | str | Sequence[SymmetryOp | str], problem: Problem,
                *, cap: int | None = None) -> Counter:
    """Group ``problem``'s assemblages by image; map class size -> number of classes."""
    if isinstance(ops, (str, SymmetryOp)):
        ops = (ops,)
    groups: Counter = Counter()
    for x in enumerate_assemblages(problem, cap=DEFAULT_CAP if cap is None else cap):
        groups[format_assemblage(apply_path(ops, x))] += 1
    return Counter(groups.values())


def _record(check: str, ok: bool, **details) -> dict:
    return {"check": check, "pass": bool(ok), "details": details}


def _divides(num: int, den: int) -> int | None:
    q, r = divmod(num, den)
    return q if r == 0 else None


def verify_quotients(m_max: int = 5, *, max_b: int | None = None, two_param_max: int = 6,
                     homogeneity: bool = True) -> list[dict]:
    """Check every quotient relationship; one record per check, failures included.

    Column-0 populations range over ``m <= m_max`` with at most ``max_b``
    batches (default ``m_max``).  Quotient (a) on Columns 1-4 is checked for
    ``1 <= m, b <= two_param_max``.
    """
    if m_max > 6:
        raise ValueError("verify_quotients is desk-scale: m_max <= 6")
    max_b = m_max if max_b is None else max_b
    report: list[dict] = []
    for m in range(m_max + 1):
        for a in iter_populations(m, max_b=max_b):
            c = {row: count_column0(row, a) for row in Row}
            falling_b = math.factorial(a.b) // math.factorial(a.a0)
            pairs = [
                ("quotient (a) A0/C0 = m!", Row.A, Row.C, math.factorial(m)),
                ("quotient (b) A0/D0 = b!/a0!", Row.A, Row.D, falling_b),
                ("quotient (b) B0/E0 = b!/a0!", Row.B, Row.E, falling_b),
                ("quotient (c) A0/B0 = iota!", Row.A, Row.B, a.iota_factorial),
                ("quotient (c) D0/E0 = iota!", Row.D, Row.E, a.iota_factorial),
                ("quotient (d) B0/C0 = (m choose iota)", Row.B, Row.C,
                 math.factorial(m) // a.iota_factorial),
            ]
            for name, hi_row, lo_row, want in pairs:
                got = _divides(c[hi_row], c[lo_row])
                report.append(_record(name, got == want, alpha=list(a.a), quotient=got, expected=want))
            # diminishment of A0 down to F0 along the two routes
            fill = math.factorial(m) // a.iota_factorial
            ok_c = (c[Row.C] * a.aplus_factorial == falling_b
                    and c[Row.A] == c[Row.C] * fill * a.iota_factorial)
            ok_e = (c[Row.E] * a.aplus_factorial == fill
                    and c[Row.A] == falling_b * c[Row.E] * a.iota_factorial)
            report.append(_record("A0 factorization via row C", ok_c, alpha=list(a.a)))
            report.append(_record("A0 factorization via row E", ok_e, alpha=list(a.a)))
            report.append(_record("F0 is the single remaining class", c[Row.F] == 1, alpha=list(a.a)))
            if homogeneity:
                for (src, dst), divisor in DIVISORS.items():
                    sizes = class_sizes(path_between(src, dst), Problem(src, "0", alpha=a))
                    want = divisor(a)
                    ok = set(sizes) == {want} and sum(sizes.values()) == c[dst]
                    report.append(_record(f"homogeneous {src.value}->{dst.value}", ok, alpha=list(a.a),
                                          class_sizes=dict(sizes), expected=want))
                # sigma and rho commute on the way from A to E
                x_src = Problem(Row.A, "0", alpha=a)
                report.append(_record("rho.sigma = sigma.rho", _commutes(x_src), alpha=list(a.a)))
    for col in ("1", "2", "3"):
        for m in range(1, two_param_max + 1):
            for b in range(1, two_param_max + 1):
                ca, cc = count(Problem(Row.A, col, m, b)), count(Problem(Row.C, col, m, b))
                ok = ca == cc * math.factorial(m)
                report.append(_record(f"quotient (a) column {col}", ok, m=m, b=b, A=ca, C=cc))
    for m in range(1, two_param_max + 1):
        ca, cc = count(Problem(Row.A, "4", m)), count(Problem(Row.C, "4", m))
        report.append(_record("quotient (a) column 4", ca == cc * math.factorial(m), m=m, A=ca, C=cc))
    return report


def _commutes(problem: Problem) -> bool:
    rs = set()
    sr = set()
    for x in enumerate_assemblages(problem):
        rs.add(format_assemblage(apply(SymmetryOp.SIGMA, apply(SymmetryOp.RHO, x))))
        sr.add(format_assemblage(apply(SymmetryOp.RHO, apply(SymmetryOp.SIGMA, x))))
    return rs == sr


def verify_quotient_listings(max_mb: int = 5, columns: Sequence[str] = ("1", "2", "3", "4")) -> list[dict]:
    """For every related row pair, the listing obtained by quotient equals the direct listing."""
    report = []
    for src, dst in relationships():
        for col in columns:
            for m in range(1, max_mb + 1):
                for b in ([None] if col == "4" else range(1, max_mb + 1)):
                    p = Problem(dst, col, m, b)
                    direct = [format_assemblage(x) for x in enumerate_assemblages(p)]
                    quot = [format_assemblage(x) for x in enumerate_by_quotient(p, src)]
                    report.append(_record(f"listing {src.value}->{dst.value} column {col}",
                                          direct == quot, m=m, b=b, size=len(direct)))
    return report
