from collections import Counter

import pytest

from twelvefold.core import Problem, Row, canonicalize, format_assemblage
from twelvefold.enumeration import enumerate_assemblages
from twelvefold.symmetry import (
    DIVISORS,
    EDGES,
    SymmetryOp,
    apply,
    apply_path,
    class_sizes,
    path_between,
    relationships,
    verify_quotient_listings,
    verify_quotients,
)


def test_apply_examples():
    x = canonicalize("A", ((2, 4), (3, 1)))
    assert format_assemblage(apply("rho", x)) == "{(2,4),(3,1)}"
    y = canonicalize("A", ((3, 1), (2, 4)))
    assert format_assemblage(apply("σ", y)) == "({1,3},{2,4})"
    z = canonicalize("B", ([2, 4], [1, 3]))
    assert format_assemblage(apply(SymmetryOp.TAU, z)) == "(2,2)"
    with pytest.raises(ValueError):
        apply("tau", y)


def test_twelve_relationships():
    pairs = relationships()
    assert len(pairs) == 12 and set(pairs) == set(DIVISORS)
    missing = {(Row.B, Row.D), (Row.C, Row.D), (Row.C, Row.E)}
    assert not missing & set(pairs)
    assert len(EDGES) == 7
    with pytest.raises(ValueError):
        path_between("C", "E")


def test_paths():
    assert path_between("A", "F") in {tuple(SymmetryOp(o) for o in p) for p in
                                      [("rho", "sigma", "tau"), ("sigma", "rho", "tau"),
                                       ("sigma", "tau", "rho")]}
    assert path_between("B", "B") == ()


def test_class_size_examples():
    assert class_sizes("rho", Problem("A", "0", alpha=(0, 1, 1, 0, 0))) == Counter({2: 6})
    assert class_sizes("sigma", Problem("A", "0", alpha=(0, 0, 2, 0, 0))) == Counter({4: 6})
    assert class_sizes("tau", Problem("B", "0", alpha=(0, 0, 2, 0, 0))) == Counter({6: 1})


def test_apply_is_canonical():
    for src, dst in relationships():
        ops = path_between(src, dst)
        for x in enumerate_assemblages(Problem(src, "2", 3, 2)):
            y = apply_path(ops, x)
            assert y.row is dst and canonicalize(dst, y.batches) == y


def test_quotients_small_scale():
    report = verify_quotients(3, two_param_max=4)
    assert report and all(r["pass"] for r in report), [r for r in report if not r["pass"]][:3]
    checks = {r["check"] for r in report}
    assert "rho.sigma = sigma.rho" in checks
    assert sum(c.startswith("homogeneous") for c in checks) == 12


def test_quotients_refuse_large_scale():
    with pytest.raises(ValueError):
        verify_quotients(7)


def test_quotient_listings_small_scale():
    report = verify_quotient_listings(3)
    assert len({r["check"] for r in report}) == 12 * 4
    assert all(r["pass"] for r in report)


def test_quotient_example_values():
    from twelvefold.formulas import count, count_column0

    assert count_column0("A", (0, 0, 2, 0, 0)) == 24 and count_column0("C", (0, 0, 2, 0, 0)) == 1
    a2, c2 = count(Problem("A", "2", 3, 2)), count(Problem("C", "2", 3, 2))
    assert (a2, c2, a2 // 6) == (24, 4, 4)
