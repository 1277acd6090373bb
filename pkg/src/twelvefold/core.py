"""Problem taxonomy and the canonical representation of assemblages.

Rows fix the nature of items and batches, columns fix the batch
population condition.  Items are always the integers ``1..m``.

Canonical text forms::

    A  ((3,1),(2,4))      sequence of lists
    B  ({2,4},{1,3})      sequence of sets
    C  (3,0,4,2)          sequence of bunch sizes
    D  {(2,4),(3,1)}      collection of non-empty lists
    E  {{1,3},{2,4}}      collection of non-empty sets
    F  (4,2,2,1)          non-increasing parts
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence


class Row(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"

    @property
    def distinguishable(self) -> bool:
        return self not in (Row.C, Row.F)

    @property
    def serial(self) -> bool:
        """True for Part I rows (batches in a sequence)."""
        return self in (Row.A, Row.B, Row.C)

    @property
    def batch_kind(self) -> str:
        return {"A": "list", "D": "list", "B": "set", "E": "set"}.get(self.value, "bunch")

    @classmethod
    def parse(cls, value: "Row | str") -> "Row":
        try:
            return cls(str(value.value if isinstance(value, Row) else value).upper())
        except ValueError:
            raise ValueError(f"unknown row {value!r}; expected one of A-F") from None


# Column ids.  "00" only exists in Part I.
COLUMNS = ("0", "00", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10")
M_COLUMNS = ("4", "5", "6")
B_COLUMNS = ("7", "8", "9", "10")

# Allowed batch sizes (lo, hi) for the one-parameter columns; hi=None is unbounded.
SIZE_BOUNDS: dict[str, tuple[int, int | None]] = {
    "4": (1, None),
    "5": (2, None),
    "6": (1, 2),
    "7": (2, 2),
    "8": (0, 1),
    "9": (0, 2),
    "10": (1, 2),
}


def parse_column(value: "str | int") -> str:
    col = str(value)
    if col not in COLUMNS:
        raise ValueError(f"unknown column {value!r}; expected one of {', '.join(COLUMNS)}")
    return col


@dataclass(frozen=True)
class PopulationVector:
    """Column-0 population ``(a_0, ..., a_m)``: ``a_i`` batches hold ``i`` items."""

    a: tuple[int, ...]
    m: int = field(init=False)
    b: int = field(init=False)
    iota: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        if not a:
            raise ValueError("population vector must have at least one entry (a_0)")
        if any(x < 0 for x in a):
            raise ValueError(f"negative entry in population vector {a}")
        m = sum(i * x for i, x in enumerate(a))
        # entries past index m are necessarily zero; store exactly m+1 of them
        a = (a + (0,) * (m + 1))[: m + 1]
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "b", sum(a))
        object.__setattr__(self, "iota", tuple(i for i, x in enumerate(a) if i for _ in range(x)))

    @property
    def a0(self) -> int:
        return self.a[0]

    @property
    def alpha_factorial(self) -> int:
        return math.prod(math.factorial(x) for x in self.a)

    @property
    def aplus_factorial(self) -> int:
        return math.prod(math.factorial(x) for x in self.a[1:])

    @property
    def iota_factorial(self) -> int:
        return math.prod(math.factorial(x) for x in self.iota)

    @classmethod
    def from_sizes(cls, sizes: Sequence[int], b: int | None = None) -> "PopulationVector":
        """Population of a batch-size list; ``b`` pads with empty batches."""
        sizes = list(sizes)
        if any(s < 0 for s in sizes):
            raise ValueError(f"negative batch size in {sizes}")
        m = sum(sizes)
        counts = Counter(sizes)
        if b is not None:
            nonempty = sum(1 for s in sizes if s)
            if b < nonempty:
                raise ValueError(f"b={b} is smaller than the {nonempty} non-empty batches")
            counts[0] = b - nonempty
        return cls(tuple(counts.get(i, 0) for i in range(m + 1)))

    def __str__(self) -> str:
        return ",".join(map(str, self.a))


def validate_population(alpha: Sequence[int], m: int) -> PopulationVector:
    """Check ``alpha`` against item count ``m`` and build the derived data."""
    alpha = tuple(alpha)
    if len(alpha) != m + 1:
        raise ValueError(f"population vector for m={m} needs {m + 1} entries, got {len(alpha)}")
    pv = PopulationVector(alpha)
    if pv.m != m:
        raise ValueError(f"sum of i*a_i is {pv.m}, expected m={m}")
    return pv


def iter_populations(
    m: int,
    *,
    b: int | None = None,
    max_b: int | None = None,
    lo: int = 0,
    hi: int | None = None,
) -> Iterator[PopulationVector]:
    """All population vectors of ``m`` items whose batch sizes lie in ``[lo, hi]``.

    ``b`` fixes the number of batches, ``max_b`` bounds it.  When ``lo == 0``
    and neither is given the number of empty batches is 0.  Order is
    lexicographic in ``(a_1, ..., a_m)``.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    top = m if hi is None else min(hi, m)
    first = max(lo, 1)

    def rec(i: int, left: int) -> Iterator[list[int]]:
        # counts for sizes first..i, processed from i downwards
        if i < first:
            if left == 0:
                yield []
            return
        for k in range(left // i + 1):
            for rest in rec(i - 1, left - k * i):
                yield rest + [k]

    found = []
    for counts in rec(top, m):
        nonempty = sum(counts)
        a = [0] * (m + 1)
        for size, k in zip(range(first, top + 1), counts):
            a[size] = k
        if b is not None:
            empties = [b - nonempty]
        elif max_b is not None:
            empties = list(range(0, max_b - nonempty + 1))
        else:
            empties = [0]
        for a0 in empties:
            if a0 < 0 or (a0 and lo > 0):
                continue
            a[0] = a0
            found.append(PopulationVector(tuple(a)))
    found.sort(key=lambda pv: (pv.a[1:], pv.a[0]))
    yield from found


@dataclass(frozen=True)
class Problem:
    """One cell of the table: a row, a column and that column's parameters."""

    row: Row
    column: str
    m: int | None = None
    b: int | None = None
    alpha: PopulationVector | None = None
    mu: tuple[int, ...] | None = None

    def __post_init__(self):
        row = Row.parse(self.row)
        col = parse_column(self.column)
        object.__setattr__(self, "row", row)
        object.__setattr__(self, "column", col)
        m, b = self.m, self.b
        if col == "0":
            if self.alpha is None:
                raise ValueError("column 0 needs a population vector alpha")
            alpha = self.alpha
            if not isinstance(alpha, PopulationVector):
                alpha = PopulationVector(tuple(alpha))
            if m is not None:
                alpha = validate_population(self.alpha.a if isinstance(self.alpha, PopulationVector)
                                            else tuple(self.alpha), m)
            if b is not None and b != alpha.b:
                raise ValueError(f"b={b} disagrees with alpha (b={alpha.b})")
            object.__setattr__(self, "alpha", alpha)
            m, b = alpha.m, alpha.b
        elif col == "00":
            if not row.serial:
                raise ValueError("column 00 only exists for rows A, B, C")
            if self.mu is None:
                raise ValueError("column 00 needs a size sequence mu")
            mu = tuple(int(x) for x in self.mu)
            if any(x < 0 for x in mu):
                raise ValueError(f"negative batch size in mu={mu}")
            if m is not None and m != sum(mu):
                raise ValueError(f"mu sums to {sum(mu)}, expected m={m}")
            if b is not None and b != len(mu):
                raise ValueError(f"mu has {len(mu)} entries, expected b={b}")
            object.__setattr__(self, "mu", mu)
            m, b = sum(mu), len(mu)
        elif col in ("1", "2", "3"):
            if m is None or b is None:
                raise ValueError(f"column {col} needs both m and b")
        elif col in M_COLUMNS:
            if m is None:
                raise ValueError(f"column {col} needs m")
            if b is not None:
                raise ValueError(f"column {col} takes no b")
        else:
            if b is None:
                raise ValueError(f"column {col} needs b")
            if m is not None:
                raise ValueError(f"column {col} takes no m (it is summed over)")
        for name, v in (("m", m), ("b", b)):
            if v is not None and (not isinstance(v, int) or v < 0):
                raise ValueError(f"{name} must be a non-negative integer, got {v!r}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "b", b)

    def with_row(self, row: Row | str) -> "Problem":
        return Problem(row, self.column, self.m if self.column not in ("0", "00") else None,
                       self.b if self.column not in ("0", "00") else None, self.alpha, self.mu)

    def describe(self) -> dict:
        d: dict = {"row": self.row.value, "column": self.column}
        if self.column == "0":
            d["alpha"] = list(self.alpha.a)
        elif self.column == "00":
            d["mu"] = list(self.mu)
        if self.m is not None:
            d["m"] = self.m
        if self.b is not None:
            d["b"] = self.b
        return d

    def __str__(self) -> str:
        params = [f"{k}={v if not isinstance(v, list) else ','.join(map(str, v))}"
                  for k, v in self.describe().items() if k not in ("row", "column")]
        return f"{self.row.value}{self.column}[{' '.join(params)}]"


# -- assemblages -----------------------------------------------------------

@dataclass(frozen=True, order=True)
class Assemblage:
    """A canonical grouping.  Build through :func:`canonicalize`."""

    row: Row
    batches: tuple

    def __str__(self) -> str:
        return format_assemblage(self)

    @property
    def sizes(self) -> tuple[int, ...]:
        if self.row.distinguishable:
            return tuple(len(x) for x in self.batches)
        return tuple(self.batches)

    @property
    def item_count(self) -> int:
        return sum(self.sizes)


def canonicalize(row: Row | str, batches) -> Assemblage:
    """Return the unique canonical representative of a raw grouping.

    Raw input may be unsorted; collections may carry empty batches, which
    are dropped.  Raises ``ValueError`` on duplicate or out-of-range items
    and on negative sizes.
    """
    row = Row.parse(row)
    if isinstance(batches, Assemblage):
        if batches.row is not row:
            raise ValueError(f"assemblage is row {batches.row.value}, not {row.value}")
        batches = batches.batches
    if row.distinguishable:
        groups = [tuple(int(x) for x in g) for g in batches]
        items = [x for g in groups for x in g]
        if len(set(items)) != len(items):
            dup = [x for x, k in Counter(items).items() if k > 1]
            raise ValueError(f"item(s) {sorted(dup)} appear more than once")
        if sorted(items) != list(range(1, len(items) + 1)):
            raise ValueError(f"items must be exactly 1..{len(items)}, got {sorted(items)}")
        if row.batch_kind == "set":
            groups = [tuple(sorted(g)) for g in groups]
        if not row.serial:
            groups = sorted(g for g in groups if g)
        return Assemblage(row, tuple(groups))
    sizes = [int(x) for x in batches]
    if any(s < 0 for s in sizes):
        raise ValueError(f"negative batch size in {sizes}")
    if row is Row.F:
        sizes = sorted((s for s in sizes if s), reverse=True)
    return Assemblage(row, tuple(sizes))


def population_of(x: Assemblage, b: int | None = None) -> PopulationVector:
    """Count batches by size.  Collections need ``b`` to restore empty batches."""
    if b is None and not x.row.serial:
        b = len(x.batches)
    return PopulationVector.from_sizes(x.sizes, b)


def _fmt_inner(row: Row, g) -> str:
    body = ",".join(map(str, g))
    return "{" + body + "}" if row.batch_kind == "set" else "(" + body + ")"


def format_assemblage(x: Assemblage) -> str:
    row = x.row
    if not row.distinguishable:
        return "(" + ",".join(map(str, x.batches)) + ")"
    inner = ",".join(_fmt_inner(row, g) for g in x.batches)
    return "(" + inner + ")" if row.serial else "{" + inner + "}"


def parse_assemblage(row: Row | str, text: str) -> Assemblage:
    """Parse a text form (canonical or not) into a canonical assemblage."""
    row = Row.parse(row)
    s = "".join(text.split())
    pos = 0

    def group() -> list:
        nonlocal pos
        if pos >= len(s) or s[pos] not in "({":
            raise ValueError(f"expected '(' or '{{' at offset {pos} in {text!r}")
        close = ")" if s[pos] == "(" else "}"
        pos += 1
        out: list = []
        while pos < len(s) and s[pos] != close:
            if s[pos] in "({":
                out.append(group())
            else:
                j = pos
                while j < len(s) and s[j].isdigit():
                    j += 1
                if j == pos:
                    raise ValueError(f"unexpected {s[pos]!r} at offset {pos} in {text!r}")
                out.append(int(s[pos:j]))
                pos = j
            if pos < len(s) and s[pos] == ",":
                pos += 1
        if pos >= len(s):
            raise ValueError(f"unbalanced brackets in {text!r}")
        pos += 1
        return out

    value = group()
    if pos != len(s):
        raise ValueError(f"trailing text in {text!r}")
    return canonicalize(row, value)
