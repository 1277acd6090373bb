"""Write the offline b-file snapshot used by ``verify oeis --offline``.

The build machine had no route to oeis.org, so each file is regenerated
from the formula or recurrence printed in the corresponding OEIS entry.
Nothing here imports the package: the snapshot must stay an independent
check on the Column-0 summation engine.  When network access is
available, ``twelvefold oeis fetch`` downloads the real b-files into the
cache directory, which takes precedence over this snapshot.

Usage: python scripts/build_oeis_snapshot.py [outdir] [terms]
"""

import math
import sys
from fractions import Fraction
from pathlib import Path

F = math.factorial
C = math.comb


def rec(initial, step, n):
    out = list(initial)
    while len(out) < n:
        out.append(step(len(out), out))
    return out[:n]


def poly_pow(base, k, order):
    out = [Fraction(1)] + [Fraction(0)] * order
    for _ in range(k):
        new = [Fraction(0)] * (order + 1)
        for i, a in enumerate(out):
            if a:
                for j, c in enumerate(base):
                    if i + j <= order:
                        new[i + j] += a * c
        out = new
    return out


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def partitions(n):
    # Euler's pentagonal-number recurrence
    p = [1] + [0] * n
    for i in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > i:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[i - g1]
            if g2 <= i:
                total += sign * p[i - g2]
            k += 1
        p[i] = total
    return p


def bell(n):
    # Bell triangle
    row, out = [1], [1]
    for _ in range(n - 1):
        new = [row[-1]]
        for x in row:
            new.append(new[-1] + x)
        row = new
        out.append(row[0])
    return out


def sum_kfact_coeffs(base, n):
    coeffs = poly_pow(base, n, 2 * n)
    total = sum(F(k) * c for k, c in enumerate(coeffs))
    assert total.denominator == 1
    return total.numerator


# A-number -> (offset, function(count) -> list of terms)
SEQUENCES = {
    "A000012": (0, "1", lambda n: [1] * n),
    "A000027": (1, "a(n) = n", lambda n: list(range(1, n + 1))),
    "A000041": (0, "Euler pentagonal-number recurrence", lambda n: partitions(n - 1)),
    "A000045": (0, "F(n) = F(n-1) + F(n-2)", lambda n: [fib(i) for i in range(n)]),
    "A000079": (0, "2^n", lambda n: [2 ** i for i in range(n)]),
    "A000085": (0, "a(n) = a(n-1) + (n-1) a(n-2)",
                lambda n: rec([1, 1], lambda i, a: a[i - 1] + (i - 1) * a[i - 2], n)),
    "A000110": (0, "Bell triangle", bell),
    "A000217": (0, "n(n+1)/2", lambda n: [i * (i + 1) // 2 for i in range(n)]),
    "A000244": (0, "3^n", lambda n: [3 ** i for i in range(n)]),
    "A000262": (0, "a(n) = (2n-1) a(n-1) - (n-1)(n-2) a(n-2)",
                lambda n: rec([1, 1], lambda i, a: (2 * i - 1) * a[i - 1] - (i - 1) * (i - 2) * a[i - 2], n)),
    "A000296": (0, "sum_k (-1)^(n-k) C(n,k) Bell(k)",
                lambda n: [sum((-1) ** (i - k) * C(i, k) * bell(k + 1)[k] for k in range(i + 1))
                           for i in range(n)]),
    "A000522": (0, "a(n) = n a(n-1) + 1", lambda n: rec([1], lambda i, a: i * a[i - 1] + 1, n)),
    "A000670": (0, "a(n) = sum_{k=1..n} C(n,k) a(n-k)",
                lambda n: rec([1], lambda i, a: sum(C(i, k) * a[i - k] for k in range(1, i + 1)), n)),
    "A000680": (0, "(2n)!/2^n", lambda n: [F(2 * i) // 2 ** i for i in range(n)]),
    "A001147": (0, "(2n-1)!!", lambda n: rec([1], lambda i, a: (2 * i - 1) * a[i - 1], n)),
    "A001515": (0, "a(n) = (2n-1) a(n-1) + a(n-2)",
                lambda n: rec([1, 2], lambda i, a: (2 * i - 1) * a[i - 1] + a[i - 2], n)),
    "A001517": (0, "a(n) = 2(2n-1) a(n-1) + a(n-2)",
                lambda n: rec([1, 3], lambda i, a: 2 * (2 * i - 1) * a[i - 1] + a[i - 2], n)),
    "A001813": (0, "(2n)!/n!", lambda n: [F(2 * i) // F(i) for i in range(n)]),
    "A002865": (0, "p(n) - p(n-1)",
                lambda n: [1] + [x - y for x, y in zip(partitions(n)[1:n], partitions(n)[: n - 1])]),
    "A002866": (0, "a(0) = 1, a(n) = n! 2^(n-1)", lambda n: [1] + [F(i) * 2 ** (i - 1) for i in range(1, n)]),
    "A003011": (0, "sum_{k=0..2n} k! [x^k] (1 + x + x^2/2)^n",
                lambda n: [sum_kfact_coeffs([1, 1, Fraction(1, 2)], i) for i in range(n)]),
    "A005442": (0, "n! F(n+1)", lambda n: [F(i) * fib(i + 1) for i in range(n)]),
    "A008619": (0, "floor(n/2) + 1", lambda n: [i // 2 + 1 for i in range(n)]),
    "A010050": (0, "(2n)!", lambda n: [F(2 * i) for i in range(n)]),
    "A011782": (0, "a(0) = 1, a(n) = 2^(n-1)", lambda n: [1] + [2 ** (i - 1) for i in range(1, n)]),
    "A032032": (0, "a(n) = sum_{k=2..n} C(n,k) a(n-k)",
                lambda n: rec([1], lambda i, a: sum(C(i, k) * a[i - k] for k in range(2, i + 1)), n)),
    "A047974": (0, "a(n) = a(n-1) + 2(n-1) a(n-2)",
                lambda n: rec([1, 1], lambda i, a: a[i - 1] + 2 * (i - 1) * a[i - 2], n)),
    "A052554": (0, "e.g.f. (1-x)/(1-x-x^2)", lambda n: [1] + [F(i) * fib(i - 1) for i in range(1, n)]),
    "A052845": (0, "e.g.f. exp(x^2/(1-x))",
                lambda n: rec([1], lambda i, a: sum(C(i - 1, k - 1) * F(k) * a[i - k] for k in range(2, i + 1)), n)),
    "A080599": (0, "a(n) = n a(n-1) + C(n,2) a(n-2)",
                lambda n: rec([1, 1], lambda i, a: i * a[i - 1] + C(i, 2) * a[i - 2], n)),
    "A082765": (0, "sum_{k=0..2n} k! [x^k] (1 + x + x^2)^n",
                lambda n: [sum_kfact_coeffs([1, 1, 1], i) for i in range(n)]),
    "A099022": (0, "sum_k C(n,k) (n+k)!",
                lambda n: [sum(C(i, k) * F(i + k) for k in range(i + 1)) for i in range(n)]),
    "A105747": (0, "sum_{j+k<=n} (j+2k)!/(j! k!)",
                lambda n: [sum(F(j + 2 * k) // (F(j) * F(k)) for k in range(i + 1) for j in range(i - k + 1))
                           for i in range(n)]),
    "A105748": (0, "sum_{j+k<=n} (j+2k)!/(j! k! 2^k)",
                lambda n: [sum(F(j + 2 * k) // (F(j) * F(k) * 2 ** k)
                               for k in range(i + 1) for j in range(i - k + 1)) for i in range(n)]),
    "A105749": (0, "sum_k C(n,k) (n+k)!/2^k",
                lambda n: [sum(C(i, k) * F(i + k) // 2 ** k for k in range(i + 1)) for i in range(n)]),
}


def main(argv):
    outdir = Path(argv[1]) if len(argv) > 1 else Path(__file__).resolve().parents[1] / "src/twelvefold/data/bfiles"
    n = int(argv[2]) if len(argv) > 2 else 25
    outdir.mkdir(parents=True, exist_ok=True)
    for anum, (offset, source, fn) in sorted(SEQUENCES.items()):
        terms = fn(n)
        assert len(terms) == n, anum
        lines = [f"# {anum}: offline reconstruction from the OEIS formula {source}"]
        lines += [f"{offset + i} {v}" for i, v in enumerate(terms)]
        (outdir / f"b{anum[1:]}.txt").write_text("\n".join(lines) + "\n")
    print(f"wrote {len(SEQUENCES)} b-files to {outdir}")


if __name__ == "__main__":
    main(sys.argv)
