"""Randomized checks of the structural invariants."""

import math

from hypothesis import given
from hypothesis import strategies as st

from twelvefold.core import PopulationVector, Problem, Row, canonicalize, format_assemblage, parse_assemblage
from twelvefold.enumeration import enumerate_assemblages, oracle_count, weak_compositions
from twelvefold.formulas import count, count_column0, count_column00, count_via_column0_sum
from twelvefold.symmetry import DIVISORS, apply_path, class_sizes, path_between

rows = st.sampled_from(list(Row))
serial_rows = st.sampled_from([Row.A, Row.B, Row.C])
small = st.integers(0, 5)


@st.composite
def populations(draw, max_m=5, max_b=5):
    b = draw(st.integers(0, max_b))
    m = draw(st.integers(0, max_m))
    if b == 0:
        m = 0
    cuts = sorted(draw(st.lists(st.integers(0, m), min_size=b - 1, max_size=b - 1))) if b else []
    sizes = [y - x for x, y in zip([0] + cuts, cuts + [m])] if b else []
    return PopulationVector.from_sizes(sizes, b)


@given(rows, st.sampled_from(["1", "2", "3"]), st.integers(1, 7), st.integers(0, 7))
def test_two_paths(row, col, m, b):
    p = Problem(row, col, m, b)
    assert count(p) == count_via_column0_sum(p)


@given(rows, st.sampled_from(["1", "2", "3"]), st.integers(1, 4), st.integers(1, 4))
def test_formula_equals_listing(row, col, m, b):
    p = Problem(row, col, m, b)
    assert count(p) == oracle_count(p)


@given(rows, populations())
def test_column0_formula_equals_listing(row, alpha):
    assert count_column0(row, alpha) == oracle_count(Problem(row, "0", alpha=alpha))


@given(serial_rows, small, small, st.data())
def test_column00_refines_column0(row, m, b, data):
    comps = list(weak_compositions(m, b))
    if not comps:
        return
    mu = data.draw(st.sampled_from(comps))
    alpha = PopulationVector.from_sizes(mu, b)
    orders = math.factorial(alpha.b) // alpha.alpha_factorial
    assert count_column0(row, alpha) == orders * count_column00(row, mu)


@given(st.integers(1, 7), st.integers(1, 7))
def test_equalities(m, b):
    c1 = {r: count(Problem(r, "1", m, b)) for r in Row}
    assert c1[Row.A] == c1[Row.B] and c1[Row.D] == c1[Row.E]
    if b < m:
        assert set(c1.values()) == {0}
    else:
        for r in (Row.D, Row.E, Row.F):
            assert count(Problem(r, "2", m, b)) == count(Problem(r, "4", m))
    if b > m:
        assert all(count(Problem(r, "3", m, b)) == 0 for r in Row)
    else:
        assert math.comb(m - 1, b - 1) == math.comb(b + (m - b) - 1, m - b)


@given(rows, st.integers(1, 7), st.integers(1, 7))
def test_summations(row, m, b):
    assert count(Problem(row, "4", m)) == sum(count(Problem(row, "3", m, d)) for d in range(1, m + 1))
    if not row.serial:
        assert count(Problem(row, "2", m, b)) == sum(count(Problem(row, "3", m, d)) for d in range(1, b + 1))


@given(st.sampled_from(sorted(DIVISORS)), populations(max_m=4, max_b=4))
def test_homogeneity(pair, alpha):
    src, dst = pair
    sizes = class_sizes(path_between(src, dst), Problem(src, "0", alpha=alpha))
    assert set(sizes) == {DIVISORS[pair](alpha)}
    assert sum(sizes.values()) == count_column0(dst, alpha)


@given(rows, st.sampled_from(["1", "2", "3"]), st.integers(0, 4), st.integers(0, 3))
def test_canonical_text_is_identity(row, col, m, b):
    texts = set()
    for x in enumerate_assemblages(Problem(row, col, m, b)):
        t = format_assemblage(x)
        assert canonicalize(row, x.batches) == x
        assert parse_assemblage(row, t) == x
        texts.add(t)
    assert len(texts) == count(Problem(row, col, m, b))


@given(st.permutations(range(1, 6)), st.lists(st.integers(0, 5), min_size=1, max_size=4), st.randoms())
def test_canonicalize_idempotent_and_order_free(perm, cuts, rnd):
    cuts = sorted(c % 6 for c in cuts)
    bounds = [0] + cuts + [5]
    lists = [tuple(perm[i:j]) for i, j in zip(bounds, bounds[1:])]
    for row in (Row.D, Row.E):
        x = canonicalize(row, lists)
        shuffled = lists[:]
        rnd.shuffle(shuffled)
        shuffled = [tuple(rnd.sample(g, len(g))) if row is Row.E else g for g in shuffled]
        assert canonicalize(row, shuffled) == x
        assert canonicalize(row, x.batches) == x


@given(st.integers(1, 4), st.integers(1, 3))
def test_rho_sigma_commute(m, b):
    for x in enumerate_assemblages(Problem("A", "3", m, b)):
        assert apply_path(["rho", "sigma"], x) == apply_path(["sigma", "rho"], x)
