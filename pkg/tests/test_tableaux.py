from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from plethyx.shapes import SkewShape, partitions
from plethyx.tableaux import (
    GPair,
    Tableau,
    count_g_pairs,
    count_ssyt,
    count_syt,
    enumerate_ssyt,
    enumerate_syt,
    f_skew,
    f_straight,
    g_condition,
    g_pairs,
    hook_content_count,
    hook_lengths,
    is_parity_tableau,
    parity_tableaux,
    rowcase_bijection,
    rowcase_inverse,
    rowcolumn_bijection,
    rowcolumn_inverse,
    rowcolumn_sources,
    smallest_absent_from_first_column,
)
from strategies import partitions_st

T1 = Tableau.from_rows([[1, 2], [3, 4]])
T2 = Tableau.from_rows([[1, 3], [2, 4]])


def brute_fillings(shape, lo, hi):
    """Every filling of ``shape`` by ``[lo, hi]``, semistandard or not."""
    shape = SkewShape.of(shape) if not isinstance(shape, SkewShape) else shape
    boxes = list(shape.boxes())
    for values in product(range(lo, hi + 1), repeat=len(boxes)):
        rows = [[] for _ in shape.outer]
        for (r, _), x in zip(boxes, values):
            rows[r - 1].append(x)
        yield Tableau.from_rows(rows, shape)


def test_tableau_access():
    t = Tableau.from_rows([[1, 1, 2], [2, 3]])
    assert t[(2, 2)] == 3
    assert t.column(1) == [1, 2]
    assert t.weight(3) == (2, 2, 1)
    assert t.reading_word() == (1, 1, 2, 2, 3)
    assert t.is_semistandard() and not t.is_standard()
    assert str(t) == "1 1 2/2 3"
    with pytest.raises(KeyError):
        t[(2, 3)]
    with pytest.raises(ValueError):
        Tableau.from_rows([[1, 2]], (3,))


def test_tableau_json_roundtrip():
    s = Tableau.from_rows([[1], [2, 2]], SkewShape.of((2, 2), (1,)))
    assert Tableau.from_json(s.to_json()) == s
    assert Tableau.from_json(T1.to_json()) == T1


@pytest.mark.parametrize(
    "shape, lo, hi",
    [((2, 1), 1, 3), ((2, 2), 1, 3), ((3,), 2, 4), (SkewShape.of((2, 2), (1,)), 1, 3), ((1, 1, 1), 1, 4)],
)
def test_ssyt_enumeration_matches_brute_force(shape, lo, hi):
    fast = list(enumerate_ssyt(shape, (lo, hi)))
    slow = [t for t in brute_fillings(shape, lo, hi) if t.is_semistandard()]
    assert fast == slow  # same reading-word order
    assert count_ssyt(shape, (lo, hi)) == len(slow)


def test_ssyt_frozen_counts():
    assert count_ssyt((2, 1), 3) == 8
    assert count_ssyt(SkewShape.of((2, 1), (1,)), 3) == 9
    assert count_ssyt((2,), (2, 4)) == 6
    assert count_ssyt((1, 1, 1, 1), 3) == 0
    assert count_ssyt(SkewShape.of((1,), (2,)), 3) == 0


@given(partitions_st(max_size=5), st.integers(min_value=1, max_value=4))
@settings(max_examples=40, deadline=None)
def test_hook_content_matches_enumeration(lam, n):
    assert hook_content_count(lam, n) == sum(1 for _ in enumerate_ssyt(lam, n))


@given(partitions_st(max_size=7))
@settings(max_examples=40, deadline=None)
def test_hook_length_formula(lam):
    assert f_straight(lam) == sum(1 for _ in enumerate_syt(lam, lam.size))


def test_hook_lengths_and_f():
    assert hook_lengths((3, 1)) == [4, 2, 1, 1]
    assert f_straight((3, 2, 1)) == 16
    assert f_straight((3, 3)) == 5
    assert f_skew(SkewShape.of((3, 2), (1,))) == 5
    assert f_skew(SkewShape.of((2,), (3,))) == 0
    assert count_syt((2, 1), 5) == 20


def test_skew_f_matches_enumeration():
    for outer in partitions(5):
        for inner in partitions(2):
            s = SkewShape.of(outer, inner)
            assert f_skew(s) == sum(1 for _ in enumerate_syt(s, s.size)), s


def test_syt_enumeration_is_standard():
    ts = list(enumerate_syt((2, 1), 4))
    assert len(ts) == 8
    assert all(t.is_standard() for t in ts)


def test_parity():
    t = Tableau.from_rows([[1, 3], [2]])
    assert smallest_absent_from_first_column(t, 3) == 3
    assert is_parity_tableau(t, 3)
    assert smallest_absent_from_first_column(Tableau.from_rows([[2]]), 3) == 1
    # first column [1, 2] with n = 2: nothing absent, convention n + 1 = 3 (odd)
    assert smallest_absent_from_first_column(Tableau.from_rows([[1], [2]]), 2) == 3
    assert [str(t) for t in parity_tableaux((1,), 3)] == ["2", "3"]


def test_g_pairs_worked_example():
    pairs = list(g_pairs((4,), (2, 2), 3))
    assert [(p.s.rows[0], p.t) for p in pairs] == [
        ((2, 2, 3, 3), T1),
        ((2, 3, 3, 3), T1),
        ((2, 3, 3, 3), T2),
        ((3, 3, 3, 3), T1),
        ((3, 3, 3, 3), T2),
    ]
    assert count_g_pairs((4,), (2, 2), 3) == 5


def test_g_condition_brute_force():
    # condition read off directly: the i-th smallest entry of S exceeds the row of i in T
    for s in enumerate_ssyt((2, 1), 3):
        for t in enumerate_syt((2, 1), 3):
            word = sorted(s.reading_word())
            expect = all(word[i - 1] > r for (r, _), i in t.items())
            assert g_condition(s, t) == expect
    with pytest.raises(ValueError):
        list(g_pairs((2,), (1,), 3))


def test_rowcase_correspondence_order():
    order = [
        [[1, 2, 3], [4, 5, 6]],
        [[1, 2, 4], [3, 5, 6]],
        [[1, 3, 4], [2, 5, 6]],
        [[1, 2, 5], [3, 4, 6]],
        [[1, 3, 5], [2, 4, 6]],
    ]
    expected = [((2, 2, 3, 3), T1), ((2, 3, 3, 3), T1), ((3, 3, 3, 3), T1), ((2, 3, 3, 3), T2), ((3, 3, 3, 3), T2)]
    assert sorted(t.rows for t in enumerate_syt((3, 3), 6)) == sorted(tuple(map(tuple, o)) for o in order)
    for rows, (s_row, t) in zip(order, expected):
        pair = rowcase_bijection(Tableau.from_rows(rows), 3)
        assert pair == GPair(Tableau.from_rows([s_row]), t)


@pytest.mark.parametrize("k, n", [(2, 2), (3, 3), (4, 3), (3, 4), (4, 4), (2, 5)])
def test_rowcase_bijection_is_a_bijection(k, n):
    for mu in partitions(k, max_len=n - 1):
        shape = tuple(x + 1 for x in mu) + (1,) * (n - 1 - len(mu))
        images = [rowcase_bijection(t, n) for t in enumerate_syt(shape, sum(shape))]
        assert len(set(images)) == len(images) == count_g_pairs((k,), mu, n)
        assert set(images) == set(g_pairs((k,), mu, n))
        for t, pair in zip(enumerate_syt(shape, sum(shape)), images):
            assert rowcase_inverse(pair, n) == t


def test_rowcase_bijection_rejects_wrong_shape():
    with pytest.raises(ValueError):
        rowcase_bijection(Tableau.from_rows([[1, 2]]), 3)


def test_rowcolumn_worked_examples():
    assert [s.rows[0] for s in rowcolumn_sources(3, 1, 4)] == [(2, 3, 4), (2, 4, 4), (3, 3, 4), (3, 4, 4), (4, 4, 4)]
    table = {(2, 2, 2): (4, 4, 4), (2, 2, 3): (3, 4, 4), (2, 2, 4): (2, 4, 4), (2, 3, 3): (3, 3, 4), (2, 3, 4): (2, 3, 4)}
    got = {s.rows[0]: rowcolumn_bijection(s, 2, 4).s.rows[0] for s in rowcolumn_sources(3, 2, 4)}
    assert got == table


@pytest.mark.parametrize("k, n", [(1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 6)])
def test_rowcolumn_bijection_for_every_p(k, n):
    targets = set(g_pairs((k,), (1,) * k, n))
    for p in range(1, n - k + 2):
        sources = list(rowcolumn_sources(k, p, n))
        images = [rowcolumn_bijection(s, p, n) for s in sources]
        assert set(images) == targets and len(images) == len(targets)
        assert [rowcolumn_inverse(g, p, n) for g in images] == sources


def test_rowcolumn_rejects_forbidden_pair():
    with pytest.raises(ValueError):
        rowcolumn_bijection(Tableau.from_rows([[3, 3]]), 2, 4)
