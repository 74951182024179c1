from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tokuyama.laurent import UniPoly
from tokuyama.statistics import (
    CoefficientMismatch,
    Segment,
    StatVector,
    a_vector,
    b_vector,
    coefficient,
    coefficient_via_decorations,
    decorations,
    flush_count,
    flush_segments,
    gaps,
    has_gaps,
    is_strict,
    seg,
    segments,
    statistic_record,
    triangle_positions,
)
from tokuyama.tableaux import Tableau, highest_weight_tableau, theta

from .conftest import SMALL_CASES, crystal, small_crystal_tableaux


def test_stat_vector_indexing():
    v = StatVector(3, (0, 1, 1, 1, 2, 3))
    assert v[1, 1] == 0 and v[1, 3] == 1 and v[2, 3] == 2 and v[3, 3] == 3
    assert v.get(0, 2) == 0 and v.get(2, 4) == 0 and v.get(4, 4) == 0
    assert str(v) == "(0,1,1;1,2;3)"
    with pytest.raises(KeyError):
        v[2, 1]
    with pytest.raises(ValueError):
        StatVector(3, (1, 2))


def test_a_vector_paper_examples(gap_example, gapless_example):
    assert a_vector(gap_example).blocks() == ((0, 1, 1), (1, 2), (3,))
    assert a_vector(gapless_example).blocks() == ((3, 2, 1), (5, 2), (5,))


def test_b_vector_paper_examples(gap_example, gapless_example):
    assert b_vector(gap_example).blocks() == ((2, 2, 1), (1, 1), (1,))
    assert b_vector(gapless_example).blocks() == ((6, 3, 1), (4, 1), (3,))


@pytest.mark.parametrize("shape", [(2, 1), (3, 1), (4, 3, 2, 1), (6, 5, 4, 1)])
def test_highest_weight_vectors_vanish(shape):
    top = highest_weight_tableau(shape)
    assert set(a_vector(top)) == {0}
    assert set(b_vector(top)) == {0}
    dec = decorations(top)
    assert all(dec.circled) and not any(dec.boxed)
    assert seg(top) == 0 and flush_count(top) == 0
    assert not has_gaps(top)
    assert coefficient(top) == UniPoly((1,))


def test_decorations_gap_example(gap_example):
    dec = decorations(gap_example)
    assert dec.is_circled(1, 1) and dec.is_boxed(1, 1)
    assert (1, 1) in dec.doubly_decorated()
    assert not dec.strict
    assert not is_strict(gap_example)


def test_decorations_gapless_example(gapless_example):
    dec = decorations(gapless_example)
    assert dec.circled_positions() == []
    assert dec.boxed_positions() == [(1, 1), (1, 2), (3, 3)]
    assert is_strict(gapless_example)


def test_single_box_is_strict():
    tab = Tableau(((1,),))
    dec = decorations(tab)
    assert dec.circled == (True,) and dec.boxed == (False,)
    assert is_strict(tab)


def test_segments_first_example(first_example):
    found = segments(first_example)
    assert [(s.row, s.color) for s in found] == [(1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (3, 5), (4, 5)]
    assert Segment(2, 4, 4, 2) in found
    assert seg(first_example) == 7


def test_flush_first_example(first_example):
    flush = {(s.row, s.color) for s in flush_segments(first_example)}
    assert flush == {(1, 3), (1, 5), (2, 3), (3, 5), (4, 5)}
    assert flush_count(first_example) == 5


def test_gapless_example_counts(gapless_example):
    assert seg(gapless_example) == 6
    assert {(s.row, s.color) for s in flush_segments(gapless_example)} == {(1, 2), (1, 3), (3, 4)}
    assert flush_count(gapless_example) == 3


def test_gaps(gap_example, gapless_example):
    assert has_gaps(gap_example)
    assert gaps(gap_example) == [(1, 2)]
    assert not has_gaps(gapless_example)


def test_first_example_has_a_gap(first_example):
    # Row 1 has no 4-segment and its 5-segment is flush, with no 5 in row 2.
    assert gaps(first_example) == [(1, 4)]
    assert decorations(first_example).doubly_decorated() == [(1, 3)]
    assert coefficient(first_example) == UniPoly()
    assert coefficient_via_decorations(first_example) == UniPoly()


def test_flush_when_nothing_higher_below():
    # The 2-segment of row 1 is followed by a 3; together they fill the
    # overhang theta_1 = 2, matching b[1,1] = theta_1 + b[2,2].
    tab = Tableau(((1, 2, 3), (2,)))
    assert {(s.row, s.color) for s in flush_segments(tab)} == {(1, 2)}
    assert decorations(tab).boxed_positions() == [(1, 1)]
    assert coefficient(tab) == coefficient_via_decorations(tab) == UniPoly.tokuyama(1, 1)


def test_coefficients_paper_examples(gap_example, gapless_example):
    assert coefficient(gap_example) == UniPoly()
    assert coefficient_via_decorations(gap_example) == UniPoly()
    expected = UniPoly((0, 0, 0, -1, 3, -3, 1))
    assert coefficient(gapless_example, check=True) == expected
    assert coefficient_via_decorations(gapless_example) == expected


def test_check_flag_raises_on_disagreement(monkeypatch, gapless_example):
    import tokuyama.statistics as stats

    monkeypatch.setattr(stats, "coefficient_via_decorations", lambda tab: UniPoly((7,)))
    with pytest.raises(CoefficientMismatch):
        stats.coefficient(gapless_example, check=True)


def test_rejects_tableau_outside_the_crystal():
    with pytest.raises(ValueError):
        a_vector(Tableau(((1, 1), (2, 2))))
    with pytest.raises(ValueError):
        seg(Tableau(((1, 1), (2,)), max_entry=4))


def test_statistic_record(gapless_example):
    record = statistic_record(gapless_example)
    assert record["content"] == [2, 5, 5, 5]
    assert record["a"] == [3, 2, 1, 5, 2, 5]
    assert record["b"] == [6, 3, 1, 4, 1, 3]
    assert record["circled"] == [False] * 6
    assert record["boxed"] == [True, True, False, False, False, True]
    assert record["seg"] == 6 and record["flush"] == 3 and record["gapless"] is True
    assert record["coefficient"] == {"coeffs_in_t": [0, 0, 0, -1, 3, -3, 1]}


ALL_SMALL = small_crystal_tableaux()


@pytest.mark.parametrize("r, weight", SMALL_CASES)
def test_two_routes_agree_on_whole_crystal(r, weight):
    for tab in crystal(r, weight):
        dec = decorations(tab)
        assert coefficient(tab) == coefficient_via_decorations(tab), tab.key()
        assert has_gaps(tab) == (not dec.strict), tab.key()
        assert seg(tab) == len(dec.base) - dec.circle_count, tab.key()
        boxed_not_circled = sum(1 for c, b in zip(dec.circled, dec.boxed) if b and not c)
        assert flush_count(tab) == boxed_not_circled, tab.key()
        if dec.strict:
            assert flush_count(tab) == dec.box_count, tab.key()


def test_boxed_minus_flush_counts_gaps():
    for tab in ALL_SMALL:
        dec = decorations(tab)
        assert dec.box_count - flush_count(tab) == len(gaps(tab)) == len(dec.doubly_decorated())


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(ALL_SMALL))
def test_b_bounded_by_overhang(tab):
    b = b_vector(tab)
    th = theta(len(row) for row in tab.rows)
    for i, j in triangle_positions(tab.rank):
        assert b[i, j] <= th[i - 1] + b.get(i + 1, j + 1)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(ALL_SMALL))
def test_a_increments_count_row_colors(tab):
    a = a_vector(tab)
    for i, j in triangle_positions(tab.rank):
        step = a[i, j] - a.get(i - 1, j)
        assert step == tab.rows[i - 1].count(j + 1)
        assert 0 <= step <= len(tab.rows[i - 1])


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(ALL_SMALL))
def test_segment_shape(tab):
    for s in segments(tab):
        row = tab.rows[s.row - 1]
        assert s.row + 1 <= s.color <= tab.rank + 1
        assert row[s.start - 1 : s.end] == (s.color,) * s.length
        assert s.start == 1 or row[s.start - 2] != s.color
        assert s.end == len(row) or row[s.end] != s.color
