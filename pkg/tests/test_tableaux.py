from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tokuyama.tableaux import (
    NotSemistandardError,
    Shape,
    Tableau,
    content,
    dimension,
    enumerate_ssyt,
    highest_weight_tableau,
    is_semistandard,
    partition_from_weight,
    shape_from_weight,
    theta,
)

from .conftest import FIRST_EXAMPLE, GAP_EXAMPLE, GAPLESS_EXAMPLE


def brute_force_ssyt(parts, n):
    """Every filling of the diagram, filtered by the semistandard test."""
    cells = sum(parts)
    found = []
    for values in itertools.product(range(1, n + 1), repeat=cells):
        rows, k = [], 0
        for part in parts:
            rows.append(values[k : k + part])
            k += part
        if is_semistandard(rows, parts, n):
            found.append(tuple(rows))
    return found


@pytest.mark.parametrize(
    "weight, expected",
    [
        ((0, 0), (2, 1)),
        ((0, 0, 2, 0), (6, 5, 4, 1)),
        ((0, 1, 1), (5, 4, 2)),
        ((1, 2, 2), (8, 6, 3)),
    ],
)
def test_shape_from_weight(weight, expected):
    assert shape_from_weight(weight).parts == expected


def test_shape_from_weight_rejects_negative_and_wrong_rank():
    with pytest.raises(ValueError):
        shape_from_weight((1, -1))
    with pytest.raises(ValueError):
        shape_from_weight((1, 0), r=3)


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_zero_weight_gives_staircase(r):
    assert shape_from_weight((0,) * r).parts == tuple(range(r, 0, -1))


def test_partition_from_weight():
    assert partition_from_weight((0, 0, 2, 0)) == (2, 2, 2, 0)
    assert partition_from_weight((1, 2, 2)) == (5, 4, 2)


@pytest.mark.parametrize(
    "shape, expected",
    [((2, 1), (1, 1)), ((6, 5, 4, 1), (1, 1, 3, 1)), ((8, 6, 3), (2, 3, 3))],
)
def test_theta(shape, expected):
    assert theta(Shape(shape)) == expected
    assert Shape(shape).theta() == expected


def test_shape_strictness():
    with pytest.raises(ValueError):
        Shape((2, 2))
    assert Shape((2, 2), strict=False).parts == (2, 2)
    with pytest.raises(ValueError):
        Shape((1, 2), strict=False)
    with pytest.raises(ValueError):
        Shape((2, 0))


@pytest.mark.parametrize(
    "rows, shape, expected",
    [
        ([[1, 1], [2]], (2, 1), True),
        ([[1, 2], [2]], (2, 1), True),
        ([[1, 1], [1]], (2, 1), False),
        ([[2, 1], [3]], (2, 1), False),
        ([[1, 1], [2]], (1, 2), False),
    ],
)
def test_is_semistandard(rows, shape, expected):
    assert is_semistandard(rows, shape) is expected


def test_is_semistandard_alphabet():
    assert is_semistandard([[1, 3]], max_entry=3)
    assert not is_semistandard([[1, 4]], max_entry=3)


def test_tableau_rejects_bad_fillings_with_cell():
    with pytest.raises(NotSemistandardError) as info:
        Tableau(((1, 1), (1,)))
    assert info.value.cell == (2, 1)
    with pytest.raises(NotSemistandardError):
        Tableau(((1, 2), ()))
    with pytest.raises(NotSemistandardError):
        Tableau(((1, 4),), max_entry=3)


def test_enumerate_tiny():
    found = [t.rows for t in enumerate_ssyt((1,), 2)]
    assert found == [((1,),), ((2,),)]


def test_enumerate_order_and_count():
    found = [t.rows for t in enumerate_ssyt((2, 1), 3)]
    assert len(found) == 8
    flat = [sum(rows, ()) for rows in found]
    assert flat == sorted(flat)


def test_enumerate_contains_first_example():
    assert FIRST_EXAMPLE in {t.rows for t in enumerate_ssyt((6, 5, 4, 1), 5)}


def test_enumerate_rejects_small_alphabet():
    with pytest.raises(ValueError):
        list(enumerate_ssyt((2, 1), 1))


@pytest.mark.parametrize("parts, n", [((2, 1), 3), ((3, 1), 3), ((2, 2), 3), ((3, 2, 1), 4), ((2,), 4), ((1, 1, 1), 4)])
def test_enumerate_matches_brute_force(parts, n):
    assert [t.rows for t in enumerate_ssyt(parts, n)] == brute_force_ssyt(parts, n)


def test_shards_partition_the_stream():
    full = [t.rows for t in enumerate_ssyt((3, 2, 1), 4)]
    pieces = [[t.rows for t in enumerate_ssyt((3, 2, 1), 4, shard=(k, 3))] for k in range(3)]
    assert sorted(sum(pieces, [])) == sorted(full)
    assert sum(len(p) for p in pieces) == len(full)


@pytest.mark.parametrize("shape, n, expected", [((1,), 2, 2), ((2, 1), 3, 8), ((2, 1), 2, 2), ((2, 1), 1, 0)])
def test_dimension(shape, n, expected):
    assert dimension(shape, n) == expected


partitions = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(lambda xs: tuple(sorted(xs, reverse=True)))


@settings(max_examples=60, deadline=None)
@given(parts=partitions, extra=st.integers(0, 2))
def test_enumeration_count_is_hook_content(parts, extra):
    if sum(parts) > 10:
        parts = parts[:1]
    n = len(parts) + extra
    found = list(enumerate_ssyt(parts, n))
    assert len(found) == dimension(parts, n)
    assert len({t.rows for t in found}) == len(found)
    for tab in found:
        assert is_semistandard(tab.rows, parts, n)
        assert sum(content(tab)) == sum(parts)


def test_content_examples():
    assert content(highest_weight_tableau((2, 1))) == (2, 1, 0)
    assert content(Tableau(GAP_EXAMPLE)) == (3, 3, 2, 3)
    assert content(Tableau(GAPLESS_EXAMPLE)) == (2, 5, 5, 5)


def test_json_round_trip():
    tab = Tableau(FIRST_EXAMPLE)
    data = json.loads(tab.to_json())
    assert data == {"shape": [6, 5, 4, 1], "rows": [[1, 1, 2, 3, 3, 5], [2, 3, 3, 4, 4], [3, 5, 5, 5], [5]]}
    assert Tableau.from_json(tab.to_json()) == tab


def test_json_shape_mismatch():
    with pytest.raises(NotSemistandardError):
        Tableau.from_dict({"shape": [2, 2], "rows": [[1, 1], [2]]})


def test_from_string():
    assert Tableau.from_string("1 1 1 3 4 / 2 2 2 4 / 3 4").rows == GAP_EXAMPLE
    assert Tableau.from_string("1,1/2").rows == ((1, 1), (2,))
