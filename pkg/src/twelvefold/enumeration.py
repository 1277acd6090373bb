"""Brute-force listing of assemblages, the independent oracle for every formula.

Generators never consult the closed forms, except for the size guard that
refuses requests whose predicted count exceeds the cap.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .core import (
    M_COLUMNS,
    SIZE_BOUNDS,
    Assemblage,
    Problem,
    Row,
    format_assemblage,
)
from .formulas import count

DEFAULT_CAP = 10**7


class CapExceeded(RuntimeError):
    """The predicted number of assemblages is above the enumeration cap."""


@dataclass(frozen=True)
class EnumerationRequest:
    problem: Problem
    emit: bool = True
    cap: int = DEFAULT_CAP

    def run(self):
        if self.emit:
            return enumerate_assemblages(self.problem, cap=self.cap)
        return oracle_count(self.problem, cap=self.cap)


# -- size vectors -------------------------------------------------------------

def weak_compositions(m: int, length: int, lo: int = 0, hi: int | None = None) -> Iterator[tuple[int, ...]]:
    """Sequences of ``length`` integers in ``[lo, hi]`` summing to ``m``."""
    hi = m if hi is None else hi
    if length == 0:
        if m == 0:
            yield ()
        return
    if m < lo * length or m > hi * length:
        return
    for first in range(lo, min(hi, m) + 1):
        for rest in weak_compositions(m - first, length - 1, lo, hi):
            yield (first,) + rest


def int_partitions(m: int, max_part: int | None = None, min_part: int = 1) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of parts in ``[min_part, max_part]`` summing to ``m``."""
    max_part = m if max_part is None else min(max_part, m)
    if m == 0:
        yield ()
        return
    for first in range(max_part, min_part - 1, -1):
        for rest in int_partitions(m - first, first, min_part):
            yield (first,) + rest


def set_partitions(m: int) -> Iterator[list[list[int]]]:
    """Set partitions of ``1..m`` via restricted growth strings."""
    if m == 0:
        yield []
        return
    rgs = [0] * m

    def rec(i: int, top: int):
        if i == m:
            blocks: list[list[int]] = [[] for _ in range(top + 1)]
            for item, blk in enumerate(rgs, start=1):
                blocks[blk].append(item)
            yield blocks
            return
        for v in range(top + 2):
            rgs[i] = v
            yield from rec(i + 1, max(top, v))

    rgs[0] = 0
    yield from rec(1, 0)


def _part1_size_vectors(p: Problem) -> Iterator[tuple[int, ...]]:
    col = p.column
    if col == "00":
        yield p.mu
    elif col == "0":
        want = Counter({i: k for i, k in enumerate(p.alpha.a) if k})
        for sizes in weak_compositions(p.m, p.b):
            if Counter(sizes) == want:
                yield sizes
    elif col == "1":
        yield from weak_compositions(p.m, p.b, 0, 1)
    elif col == "2":
        yield from weak_compositions(p.m, p.b)
    elif col == "3":
        yield from weak_compositions(p.m, p.b, 1)
    elif col in M_COLUMNS:
        lo, hi = SIZE_BOUNDS[col]
        lo = max(lo, 1)
        for length in range(p.m // lo + 1):
            yield from weak_compositions(p.m, length, lo, hi)
    else:
        lo, hi = SIZE_BOUNDS[col]
        for m in range(lo * p.b, hi * p.b + 1):
            yield from weak_compositions(m, p.b, lo, hi)


def _part2_shapes(p: Problem) -> tuple[list[int], Callable[[tuple[int, ...]], bool]]:
    """Item counts to scan and a test on the non-increasing non-empty sizes."""
    col = p.column
    if col == "0":
        want = tuple(sorted(p.alpha.iota, reverse=True))
        return [p.m], lambda lam: lam == want
    if col == "1":
        return [p.m], lambda lam: len(lam) <= p.b and all(s == 1 for s in lam)
    if col == "2":
        return [p.m], lambda lam: len(lam) <= p.b
    if col == "3":
        return [p.m], lambda lam: len(lam) == p.b
    lo, hi = SIZE_BOUNDS[col]
    fits = (lambda lam: all(s >= lo and (hi is None or s <= hi) for s in lam))
    if col in M_COLUMNS:
        return [p.m], fits
    b = p.b
    ms = list(range(lo * b, hi * b + 1))
    if lo == 0:
        return ms, lambda lam: len(lam) <= b and fits(lam)
    return ms, lambda lam: len(lam) == b and fits(lam)


# -- raw generation -------------------------------------------------------------

def _ordered_set_partitions(items: tuple[int, ...], sizes: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not sizes:
        yield ()
        return
    first, rest = sizes[0], sizes[1:]
    for block in itertools.combinations(items, first):
        left = tuple(x for x in items if x not in block)
        for tail in _ordered_set_partitions(left, rest):
            yield (block,) + tail


def _split(perm: tuple[int, ...], sizes: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    out, i = [], 0
    for s in sizes:
        out.append(perm[i:i + s])
        i += s
    return tuple(out)


def _raw(p: Problem) -> Iterator[Assemblage]:
    """Every assemblage of ``p`` exactly once, in canonical form, unordered."""
    row = p.row
    if row.serial:
        for sizes in _part1_size_vectors(p):
            m = sum(sizes)
            items = tuple(range(1, m + 1))
            if row is Row.C:
                yield Assemblage(row, sizes)
            elif row is Row.B:
                for groups in _ordered_set_partitions(items, sizes):
                    yield Assemblage(row, groups)
            else:
                for perm in itertools.permutations(items):
                    yield Assemblage(row, _split(perm, sizes))
        return
    ms, ok = _part2_shapes(p)
    for m in ms:
        if row is Row.F:
            for lam in int_partitions(m):
                if ok(lam):
                    yield Assemblage(row, lam)
            continue
        for blocks in set_partitions(m):
            lam = tuple(sorted((len(x) for x in blocks), reverse=True))
            if not ok(lam):
                continue
            if row is Row.E:
                yield Assemblage(row, tuple(tuple(x) for x in blocks))
            else:
                for lists in itertools.product(*(itertools.permutations(x) for x in blocks)):
                    yield Assemblage(row, tuple(sorted(lists)))


def _guard(p: Problem, cap: int | None) -> None:
    if cap is None:
        return
    predicted = count(p)
    if predicted > cap:
        raise CapExceeded(f"{p} has {predicted} assemblages, above the cap of {cap}")


def enumerate_assemblages(problem: Problem, *, cap: int | None = DEFAULT_CAP) -> Iterator[Assemblage]:
    """Canonical assemblages of ``problem`` in lexicographic order of their text form."""
    _guard(problem, cap)
    keyed = sorted((format_assemblage(x), x) for x in _raw(problem))
    return iter([x for _, x in keyed])


def enumerate_text(problem: Problem, *, cap: int | None = DEFAULT_CAP) -> list[str]:
    """Sorted canonical text forms."""
    _guard(problem, cap)
    return sorted(format_assemblage(x) for x in _raw(problem))


DISTINCT_LIMIT = 500_000


def oracle_count(problem: Problem, *, cap: int | None = DEFAULT_CAP,
                 distinct_limit: int = DISTINCT_LIMIT) -> int:
    """Counting by listing: the number of distinct canonical assemblages.

    Only the first ``distinct_limit`` forms are held in a set, to bound
    memory; past that the stream is counted as it comes.
    """
    _guard(problem, cap)
    seen: set[str] = set()
    total = 0
    for x in _raw(problem):
        total += 1
        if total <= distinct_limit:
            seen.add(format_assemblage(x))
    # duplicates caught in the collected prefix still reduce the count
    return total - (min(total, distinct_limit) - len(seen))


def enumerate_by_quotient(
    problem: Problem, source: Row | str = Row.A, *, cap: int | None = DEFAULT_CAP
) -> list[Assemblage]:
    """List ``problem`` by mapping an ancestor row's listing through the symmetries."""
    from .symmetry import apply_path, path_between

    source = Row.parse(source)
    ops = path_between(source, problem.row)
    src = problem.with_row(source)
    images = {}
    for x in enumerate_assemblages(src, cap=cap):
        y = apply_path(ops, x)
        images[format_assemblage(y)] = y
    return [images[k] for k in sorted(images)]


def text_of(xs: Iterable[Assemblage]) -> list[str]:
    return [format_assemblage(x) for x in xs]
