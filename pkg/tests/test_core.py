import pytest

from twelvefold.core import (
    Assemblage,
    PopulationVector,
    Problem,
    Row,
    canonicalize,
    format_assemblage,
    iter_populations,
    parse_assemblage,
    population_of,
    validate_population,
)


def test_row_attributes():
    assert [r.distinguishable for r in Row] == [True, True, False, True, True, False]
    assert [r.serial for r in Row] == [True, True, True, False, False, False]
    assert [r.batch_kind for r in Row] == ["list", "set", "bunch"] * 2
    assert Row.parse("e") is Row.E


def test_validate_population_two_pairs():
    a = validate_population((0, 0, 2, 0, 0), 4)
    assert (a.m, a.b, a.iota) == (4, 2, (2, 2))
    assert a.iota_factorial == 4 and a.alpha_factorial == 2 and a.aplus_factorial == 2


def test_validate_population_empty():
    a = validate_population((0,), 0)
    assert (a.b, a.iota) == (0, ())


def test_validate_population_mixed_sizes():
    a = validate_population((0, 1, 1, 0), 3)
    assert (a.b, a.iota) == (2, (1, 2))


@pytest.mark.parametrize("alpha, m", [((0, 0, 1, 0), 3), ((0, -1, 1), 1), ((1, 1), 2)])
def test_validate_population_rejects(alpha, m):
    with pytest.raises(ValueError):
        validate_population(alpha, m)


def test_iter_populations_counts():
    # m=4, b=2: sizes {0,4}, {1,3}, {2,2}
    assert len(list(iter_populations(4, b=2))) == 3
    assert all(a.m == 5 for a in iter_populations(5, max_b=5))


def test_from_sizes():
    a = PopulationVector.from_sizes((2, 0, 2))
    assert a.a == (1, 0, 2, 0, 0)


def test_canonicalize_examples():
    assert format_assemblage(canonicalize("E", [[2, 4], [1, 3]])) == "{{1,3},{2,4}}"
    assert format_assemblage(canonicalize("F", (1, 2, 2, 4))) == "(4,2,2,1)"
    x = canonicalize("A", ((3, 1), (2, 4)))
    assert format_assemblage(x) == "((3,1),(2,4))"
    assert canonicalize("A", x.batches) == x


def test_canonical_text_per_row():
    assert format_assemblage(canonicalize("B", ([4, 2], [3, 1]))) == "({2,4},{1,3})"
    assert format_assemblage(canonicalize("C", (3, 0, 4, 2))) == "(3,0,4,2)"
    assert format_assemblage(canonicalize("D", ((3, 1), (2, 4)))) == "{(2,4),(3,1)}"
    assert format_assemblage(canonicalize("D", ((3, 1), (), (2, 4)))) == "{(2,4),(3,1)}"


@pytest.mark.parametrize("row, batches", [
    ("A", ((1, 2), (2,))),
    ("E", ((1,), (3,))),
    ("C", (1, -1)),
    ("F", (2, -1)),
])
def test_canonicalize_rejects(row, batches):
    with pytest.raises(ValueError):
        canonicalize(row, batches)


@pytest.mark.parametrize("row, text", [
    ("A", "((3,1),(2,4))"), ("B", "({2,4},{1,3})"), ("C", "(3,0,4,2)"),
    ("D", "{(2,4),(3,1)}"), ("E", "{{1,3},{2,4}}"), ("F", "(4,2,2,1)"),
    ("A", "((),(1))"), ("E", "{}"),
])
def test_parse_round_trip(row, text):
    assert format_assemblage(parse_assemblage(row, text)) == text


def test_population_of():
    x = canonicalize("B", ([2, 4], [1, 3]))
    assert population_of(x).a == (0, 0, 2, 0, 0)
    assert population_of(canonicalize("E", [[1], [2, 3]]), b=3).a == (1, 1, 1, 0)


def test_problem_validation():
    p = Problem("B", "0", m=4, alpha=(0, 0, 2, 0, 0))
    assert (p.m, p.b) == (4, 2)
    assert str(Problem("E", 4, m=3)) == "E4[m=3]"
    assert Problem("A", "00", mu=(1, 3)).b == 2
    for bad in [dict(row="D", column="00", mu=(1,)), dict(row="A", column="2", m=2),
                dict(row="A", column="5", m=2, b=1), dict(row="A", column="7", m=1, b=1),
                dict(row="A", column="1", m=-1, b=1), dict(row="A", column="0", m=3, alpha=(0, 0, 1, 0)),
                dict(row="G", column="1", m=1, b=1), dict(row="A", column="11", m=1)]:
        with pytest.raises(ValueError):
            Problem(**bad)


def test_with_row_keeps_parameters():
    p = Problem("A", "0", alpha=(0, 1, 1, 0)).with_row("F")
    assert p.row is Row.F and p.alpha.a == (0, 1, 1, 0)


def test_assemblage_sizes():
    x = Assemblage(Row.A, ((3, 1), (2, 4), ()))
    assert x.sizes == (2, 2, 0) and x.item_count == 4
