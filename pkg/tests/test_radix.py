import random

import pytest
from hypothesis import given, strategies as st

from moadd.errors import InvalidBaseError, InvalidWidthError, NotAnAdditionError
from moadd.radix import (AddProblem, ColumnSum, DigitVec, concat, digit_count, format_operand_text,
                         from_value, oracle_sum, parse_digits, parse_operand_text, read_operand_file,
                         split_sum_carry, to_value)


def test_from_value_zero():
    assert from_value(0, 2).digits == (0,)


def test_from_value_hex_sum_of_worked_example():
    v = from_value(0xA + 0xF + 0x1 + 0x2, 16)
    assert v.digits == (0xC, 0x1)
    assert v.to_string() == "1C"


def test_from_value_sixteen_rows_of_9999():
    assert from_value(159984, 10).digits == (4, 8, 9, 9, 5, 1)


def test_bad_base():
    with pytest.raises(InvalidBaseError):
        from_value(3, 1)


def test_digits_out_of_range():
    with pytest.raises(InvalidBaseError):
        DigitVec(2, (0, 2))


def test_to_value_examples():
    assert to_value(DigitVec(2, (0,))) == 0
    assert to_value(parse_digits("1C", 16)) == 28


def test_roundtrip_small_exhaustive():
    for k in (2, 3, 10, 16):
        for x in range(2000):
            assert to_value(from_value(x, k)) == x


@given(st.integers(0, 2**64 - 1), st.integers(2, 300))
def test_roundtrip_property(x, k):
    v = from_value(x, k)
    assert v.is_canonical()
    assert to_value(v) == x
    assert len(v) == digit_count(x, k)


def test_canonical_and_padding():
    v = DigitVec(10, (3, 0, 0))
    assert not v.is_canonical()
    assert v.canonical().digits == (3,)
    assert from_value(5, 10).padded(4).digits == (5, 0, 0, 0)
    assert DigitVec(10, (0, 0)).canonical().digits == (0,)


def test_column_sum():
    cs = ColumnSum.of(17, 10)
    assert (cs.carry, cs.sum_digit) == (1, 7)
    assert cs.total == 10 * cs.carry + cs.sum_digit


@given(st.integers(0, 10**6), st.integers(2, 64))
def test_column_sum_identity(z, k):
    cs = ColumnSum.of(z, k)
    assert z == k * cs.carry + cs.sum_digit and 0 <= cs.sum_digit < k


def test_problem_validation():
    with pytest.raises(NotAnAdditionError):
        AddProblem.from_values([1], 4)
    with pytest.raises(InvalidWidthError):
        AddProblem.from_values([1, 2], 0)
    with pytest.raises(InvalidWidthError):
        AddProblem.from_values([1, 16], 4)


def test_oracle_examples():
    assert oracle_sum(AddProblem.all_max(16, 4, 10)).to_string() == "159984"
    assert oracle_sum(AddProblem.from_values([0xA, 0xF, 0x1, 0x2], 4)).value == 0x1C
    p = AddProblem.from_values([0xA234, 0xFFFF, 0x0A2D, 0xFF7F], 4, 16)
    assert oracle_sum(p).to_string() == "2ABDF"


def test_oracle_all_max_closed_form():
    for k in (2, 8, 10, 16):
        for n in range(2, 65):
            for m in range(1, 7):
                assert oracle_sum(AddProblem.all_max(n, m, k)) == from_value(n * (k**m - 1), k)


@given(st.lists(st.integers(0, 255), min_size=2, max_size=20), st.randoms())
def test_oracle_permutation_invariant(vals, rnd):
    a = AddProblem.from_values(vals, 8)
    shuffled = list(vals)
    rnd.shuffle(shuffled)
    assert oracle_sum(a) == oracle_sum(AddProblem.from_values(shuffled, 8))
    assert oracle_sum(a).value == sum(vals)


def test_split_sum_carry_examples():
    c, s = split_sum_carry(parse_digits("110001", 2), 3)
    assert (c.to_string(), s.to_string()) == ("110", "001")
    c, s = split_sum_carry(parse_digits("10000101", 2), 3)
    assert (c.to_string(), s.to_string()) == ("10000", "101")
    c, s = split_sum_carry(parse_digits("11", 2), 3)
    assert (c.value, s.digits) == (0, (1, 1, 0))


@given(st.integers(0, 10**9), st.integers(2, 16), st.integers(1, 8))
def test_split_then_concat_is_identity(x, k, m):
    z = from_value(x, k)
    assert concat(*split_sum_carry(z, m)) == z


def test_to_base2_keeps_value():
    p = AddProblem.from_values([0xA234, 0xFFFF], 4, 16)
    b = p.to_base2()
    assert b.base == 2 and b.width == 16 and b.values() == p.values()


def test_operand_file_roundtrip(tmp_path):
    p = AddProblem.from_values([0xA, 0xF, 0x1, 0x2], 1, 16)
    f = tmp_path / "ops.txt"
    f.write_text(format_operand_text(p))
    assert read_operand_file(f) == p
    assert parse_operand_text(["A", "F", "1", "2"], 16) == p


def test_operand_file_needs_base():
    with pytest.raises(ValueError):
        parse_operand_text(["1", "0"])


def test_many_random_sums_match_python():
    rng = random.Random(7)
    for _ in range(200):
        k = rng.randint(2, 40)
        m = rng.randint(1, 6)
        vals = [rng.randrange(k**m) for _ in range(rng.randint(2, 30))]
        assert oracle_sum(AddProblem.from_values(vals, m, k)).value == sum(vals)
