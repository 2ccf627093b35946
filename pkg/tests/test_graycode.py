"""Closed-form Gray-code queries against the printed tables and the recursive construction."""

import pytest

from lnorms.core.errors import IndexOutOfRangeError, SizeTooLargeError
from lnorms.core.graycode import (
    MAX_CONSTRUCT_WORDS,
    brgc_change_index,
    brgc_digit,
    dary_change_index,
    dary_digit,
    power_table,
    reflect_construct,
    word_at,
)

# Rows are digit i = 0..h-1, columns are words j.
BRGC_TABLE = [
    "0110011001100110",
    "0011110000111100",
    "0000111111110000",
    "0000000011111111",
]
# (digit, direction) of the change at words 1..15.
BRGC_CHANGES = ["0+", "1+", "0-", "2+", "0+", "1-", "0-", "3+",
                "0+", "1+", "0-", "2-", "0+", "1-", "0-"]

TERNARY_TABLE = [
    "012210012210012210012210012",
    "000111222222111000000111222",
    "000000000111111111222222222",
]
TERNARY_CHANGES = "00100100200100100200100100"

PROPERTY_CASES = [(2, h) for h in range(1, 16)] + [(3, h) for h in range(1, 11)] \
    + [(4, h) for h in range(1, 9)]
# Every (d, h) with d^h <= 3^10.
HAMMING_CASES = [(d, h) for d in (2, 3, 4, 5) for h in range(1, 16) if d ** h <= 3 ** 10]
# Every (d, h) with d^h <= 60000.
ALIGNMENT_CASES = [(d, h) for d in (2, 3, 4) for h in range(2, 16) if d ** h <= 60_000]


def test_brgc_table_entries():
    for i, row in enumerate(BRGC_TABLE):
        for j, bit in enumerate(row):
            assert brgc_digit(i, j) == int(bit), (i, j)


def test_brgc_change_markers():
    for j, marker in enumerate(BRGC_CHANGES, start=1):
        i = brgc_change_index(j)
        assert i == int(marker[0])
        assert brgc_digit(i, j) == (1 if marker[1] == "+" else 0)


@pytest.mark.parametrize("i,j,expected", [(0, 1, 1), (2, 12, 0), (3, 0, 0)])
def test_brgc_digit_examples(i, j, expected):
    assert brgc_digit(i, j) == expected


@pytest.mark.parametrize("j,expected", [(4, 2), (8, 3), (1, 0), (6, 1), (1 << 61, 61)])
def test_brgc_change_index_is_trailing_zero_count(j, expected):
    assert brgc_change_index(j) == expected


def test_ternary_table_entries_and_changes():
    for i, row in enumerate(TERNARY_TABLE):
        for j, digit in enumerate(row):
            assert dary_digit(3, i, j) == int(digit), (i, j)
    for j, marker in enumerate(TERNARY_CHANGES, start=1):
        assert dary_change_index(3, j) == int(marker)


@pytest.mark.parametrize("d,i,j,expected", [(3, 1, 5, 1), (3, 2, 18, 2), (4, 0, 5, 2), (5, 0, 7, 2)])
def test_dary_digit_examples(d, i, j, expected):
    assert dary_digit(d, i, j) == expected


@pytest.mark.parametrize("j,expected", [(9, 2), (3, 1), (1, 0), (18, 2), (27, 3)])
def test_ternary_change_index_examples(j, expected):
    assert dary_change_index(3, j) == expected


def test_binary_closed_forms_agree():
    for i in range(4):
        for j in range(16):
            assert dary_digit(2, i, j) == brgc_digit(i, j)


def test_change_index_rejects_word_zero():
    with pytest.raises(ValueError):
        brgc_change_index(0)
    with pytest.raises(ValueError):
        dary_change_index(3, 0)


class TestWordAt:

    def test_binary_column(self):
        assert word_at(2, 4, 5).digits == (1, 1, 1, 0)

    def test_ternary_column(self):
        assert word_at(3, 3, 9).digits == (2, 2, 1)

    @pytest.mark.parametrize("d,h", [(2, 5), (3, 4), (7, 2)])
    def test_word_zero_is_all_zero(self, d, h):
        assert word_at(d, h, 0).digits == (0,) * h

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            word_at(3, 3, 27)
        with pytest.raises(IndexOutOfRangeError):
            word_at(2, 4, -1)

    def test_full_binary_width(self):
        word = word_at(2, 62, (1 << 62) - 1)
        assert word.digits == (0,) * 61 + (1,)

    def test_as_array(self):
        assert word_at(3, 3, 9).as_array().tolist() == [2, 2, 1]


class TestReflectConstruct:

    def test_binary_table(self):
        expected = [tuple(int(row[j]) for row in BRGC_TABLE) for j in range(16)]
        assert reflect_construct(2, 4) == expected

    def test_ternary_table(self):
        expected = [tuple(int(row[j]) for row in TERNARY_TABLE) for j in range(27)]
        assert reflect_construct(3, 3) == expected

    def test_single_digit(self):
        assert reflect_construct(2, 1) == [(0,), (1,)]

    def test_size_guard(self):
        with pytest.raises(SizeTooLargeError):
            reflect_construct(3, 13)
        assert len(reflect_construct(3, 12)) == MAX_CONSTRUCT_WORDS


@pytest.mark.parametrize("d,h", PROPERTY_CASES)
def test_closed_form_matches_recursion(d, h):
    construction = reflect_construct(d, h)
    assert [word_at(d, h, j).digits for j in range(d ** h)] == construction
    assert len(set(construction)) == d ** h


@pytest.mark.parametrize("d,h", HAMMING_CASES)
def test_neighbours_differ_in_the_change_digit_only(d, h):
    previous = word_at(d, h, 0).digits
    for j in range(1, d ** h):
        current = word_at(d, h, j).digits
        changed = [i for i in range(h) if current[i] != previous[i]]
        assert changed == [dary_change_index(d, j)]
        previous = current


@pytest.mark.parametrize("d,h", PROPERTY_CASES)
def test_change_index_equals_largest_dividing_power(d, h):
    for j in range(1, d ** h):
        largest = max(i for i in range(h + 1) if j % d ** i == 0)
        assert dary_change_index(d, j) == largest
        if d == 2:
            assert brgc_change_index(j) == (j & -j).bit_length() - 1


@pytest.mark.parametrize("d,h", ALIGNMENT_CASES)
def test_groups_change_in_lockstep(d, h):
    for l in range(1, h):
        group = d ** (h - l)
        for k in range(1, group):
            indices = {dary_change_index(d, g * group + k) for g in range(d ** l)}
            assert len(indices) == 1, (l, k)


@pytest.mark.parametrize("d,h", [(2, 12), (3, 8), (5, 5)])
def test_change_frequency_and_probe_bound(d, h):
    indices = [dary_change_index(d, j) for j in range(1, d ** h)]
    assert indices.count(0) == d ** h * (d - 1) // d
    assert sum(i + 1 for i in indices) <= 2 * d ** h


def test_power_table():
    assert power_table(3, 4).tolist() == [1, 3, 9, 27, 81]
    assert power_table(2, 62)[-1] == 1 << 62
