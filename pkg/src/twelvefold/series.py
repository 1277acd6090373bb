"""Truncated formal power series with exact rational coefficients."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable


def _norm(c):
    # keep integer coefficients as int; it is much faster than Fraction
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, (int, Fraction)):
        return c
    if isinstance(c, Rational):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class SeriesPoly:
    """Power series known up to and including ``x**order``.

    Arithmetic between series truncates to the smaller order, so nothing is
    ever silently claimed beyond the precision of the inputs.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [_norm(c) for c in coeffs][: order + 1]
        cs += [0] * (order + 1 - len(cs))
        self.coeffs: tuple = tuple(cs)
        self.order = order

    @classmethod
    def one(cls, order: int) -> "SeriesPoly":
        return cls([1], order)

    @classmethod
    def geometric(cls, step: int, order: int) -> "SeriesPoly":
        """``1 / (1 - x**step)`` truncated at ``order``."""
        if step < 1:
            raise ValueError("step must be positive")
        return cls([1 if n % step == 0 else 0 for n in range(order + 1)], order)

    @classmethod
    def exp_x(cls, order: int) -> "SeriesPoly":
        return cls([Fraction(1, math.factorial(n)) for n in range(order + 1)], order)

    def __getitem__(self, n: int):
        if n < 0:
            return 0
        if n > self.order:
            raise IndexError(f"coefficient x^{n} is past the truncation order {self.order}")
        return self.coeffs[n]

    def coefficient(self, n: int):
        return self[n]

    def __eq__(self, other):
        if not isinstance(other, SeriesPoly):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __repr__(self) -> str:
        return f"SeriesPoly({list(self.coeffs)!r}, order={self.order})"

    def _coerce(self, other) -> "SeriesPoly":
        if isinstance(other, SeriesPoly):
            return other
        return SeriesPoly([other], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return SeriesPoly([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return SeriesPoly([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, SeriesPoly):
            c = _norm(other)
            return SeriesPoly([c * x for x in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        # skip zero coefficients: geometric factors are sparse
        right = [(j, c) for j, c in enumerate(other.coeffs[: n + 1]) if c]
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j, c in right:
                if i + j > n:
                    break
                out[i + j] += a * c
        return SeriesPoly(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = SeriesPoly.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "SeriesPoly":
        """Multiply by ``x**k`` (``k >= 0``)."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        return SeriesPoly([0] * k + list(self.coeffs), self.order)

    def exp(self) -> "SeriesPoly":
        """``exp(f)`` for a series with zero constant term.

        Uses ``g' = f' g``, i.e. ``n g_n = sum_k k f_k g_{n-k}``.
        """
        if self.coeffs[0] != 0:
            raise ValueError("exp needs a zero constant term to stay exact")
        f = self.coeffs
        g = [Fraction(1)]
        for n in range(1, self.order + 1):
            g.append(sum((k * f[k] * g[n - k] for k in range(1, n + 1)), Fraction(0)) / n)
        return SeriesPoly(g, self.order)


def partition_gf_coefficient(m: int, b: int) -> int:
    """Coefficient of ``x**m`` in ``x**b / prod_{i<=b} (1 - x**i)``: partitions of m into b parts."""
    if m < 0 or b < 0:
        raise ValueError("m and b must be non-negative")
    if m < b:
        return 0
    n = m - b
    acc = SeriesPoly.one(n)
    for i in range(1, b + 1):
        if i > n:
            # factors of degree past the truncation only contribute their constant 1
            break
        acc = acc * SeriesPoly.geometric(i, n)
    # [x^m] x^b P(x) = [x^(m-b)] P(x)
    return int(acc[n])


def bell_via_egf(max_m: int) -> list[int]:
    """``B(0..max_m)`` read off ``m! [x^m] exp(exp(x) - 1)``."""
    if max_m < 0:
        raise ValueError("max_m must be non-negative")
    g = (SeriesPoly.exp_x(max_m) - 1).exp()
    out = []
    for m in range(max_m + 1):
        v = g[m] * math.factorial(m)
        v = Fraction(v)
        assert v.denominator == 1
        out.append(v.numerator)
    return out


def trinomial_weights(b: int, max_k: int) -> list:
    """Coefficients ``U_0..U_max_k`` of ``(1 + x + x**2/2)**b``."""
    if b < 0 or max_k < 0:
        raise ValueError("b and max_k must be non-negative")
    base = SeriesPoly([1, 1, Fraction(1, 2)], max_k)
    return list((base ** b).coeffs)
