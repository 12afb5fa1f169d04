from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from limweight.core.exceptions import MixedGenericTags, ParseError, UndecidableDescriptor
from limweight.weights import (
    ExtScalar,
    Partition,
    SetDescriptor,
    Weight,
    WeightSeq,
    int_sets,
    parse_seq,
    parse_set,
)

from conftest import int_seqs, scalars, semi_infinite_sets, sets


# Scalars


def test_scalar_text_forms():
    assert ExtScalar.parse("3/2") == ExtScalar(Fraction(3, 2))
    assert ExtScalar.parse("g0+2") == ExtScalar.generic(0, 2)
    assert ExtScalar.parse(" g1 - 1/2 ") == ExtScalar.generic(1, Fraction(-1, 2))
    assert str(ExtScalar.generic(0, 2)) == "g0+2"
    assert str(ExtScalar.generic(3)) == "g3"
    assert str(ExtScalar.rational(Fraction(-5, 2))) == "-5/2"


@pytest.mark.parametrize("text", ["", "x", "g", "1/0", "g0*2"])
def test_scalar_parse_errors(text):
    with pytest.raises(ParseError):
        ExtScalar.parse(text)


@given(scalars)
def test_scalar_text_is_stable(x):
    assert ExtScalar.parse(str(x)) == x


def test_integrality_classes():
    assert ExtScalar.rational(0).is_nonneg_integer
    assert ExtScalar.rational(-1).is_neg_integer
    assert not ExtScalar.rational(Fraction(1, 2)).is_integer
    assert not ExtScalar.generic(0).is_integer
    assert ExtScalar.generic(0, 3).differs_by_integer(ExtScalar.generic(0, -1))
    assert not ExtScalar.generic(0).differs_by_integer(ExtScalar.generic(1))
    assert ExtScalar.generic(0).difference(ExtScalar.rational(1)) is None


def test_generic_arithmetic_stays_single_tag():
    g = ExtScalar.generic(0, 1)
    assert g + 2 == ExtScalar.generic(0, 3)
    assert g - ExtScalar.generic(0) == ExtScalar.rational(1)
    with pytest.raises(MixedGenericTags):
        g + ExtScalar.generic(1)
    with pytest.raises(MixedGenericTags):
        -g


# Sets


def test_set_grammar():
    assert parse_set("odds") == SetDescriptor.odds()
    assert parse_set("{1,3,5,...}") == SetDescriptor.odds()
    assert parse_set("{2,4,...}") == SetDescriptor.evens()
    assert parse_set("{all}") == SetDescriptor.everything()
    assert parse_set("{}") == SetDescriptor.empty()
    periodic = parse_set("{1,3; period=2, pattern=10, start=5}")
    assert periodic.members_up_to(9) == (1, 3, 5, 7, 9)
    assert periodic == SetDescriptor.odds()
    assert parse_set("{4,...}") == SetDescriptor.finite([1, 2, 3]).complement()


def test_set_text_form_reparses():
    s = parse_set("{2,7; period=3, pattern=110, start=9}")
    assert parse_set(str(s)) == s


def test_set_text_form_is_canonical():
    spelled = parse_set("{1,3; period=2, pattern=10, start=5}")
    assert str(spelled) == str(parse_set("odds")) == str(SetDescriptor.odds())
    assert str(spelled) != "{1,3; period=2, pattern=10, start=5}"
    assert str(parse_set("{3,1,2}")) == "{1,2,3}"


@pytest.mark.parametrize("text", ["1,2", "{0}", "{3,1,...}", "{1; period=2, pattern=1}"])
def test_set_parse_errors(text):
    with pytest.raises(ParseError):
        parse_set(text)


@given(sets(), sets())
def test_set_boolean_algebra(a, b):
    assert (a | b).complement() == a.complement() & b.complement()
    assert (a ^ b) ^ b == a
    assert a - b == a & b.complement()
    assert a | a.complement() == SetDescriptor.everything()


@given(semi_infinite_sets)
def test_semi_infinite_shape(a):
    assert a.is_semi_infinite and a.complement().is_semi_infinite
    assert not a.is_finite and not a.is_cofinite
    with pytest.raises(UndecidableDescriptor):
        a.elements()


def test_set_queries():
    s = SetDescriptor.finite([5, 2, 9])
    assert s.elements() == (2, 5, 9)
    assert s.cardinality() == 3
    assert (s.min_element(), s.max_element()) == (2, 9)
    assert SetDescriptor.evens().first_elements(3) == (2, 4, 6)
    assert SetDescriptor.evens().max_element() is None
    assert SetDescriptor.odds().differs_finitely(SetDescriptor.odds() ^ SetDescriptor.finite([2, 4]))


# Sequences


def test_sequence_grammar():
    seq = parse_seq("[1,2,g0; tail=-1]")
    assert seq.truncate(5) == Weight.of(1, 2, "g0", -1, -1)
    drifting = parse_seq("[1,2,g0; tail=-1; step=-1]")
    assert [str(drifting.entry(i)) for i in range(4, 7)] == ["-1", "-2", "-3"]
    assert parse_seq("[tail=-1,0]").window(4) == parse_seq("[-1; tail=0,-1]").window(4)


@pytest.mark.parametrize("text", ["[1,2]", "1,2; tail=0", "[1,,2; tail=0]", "[1; tail=0; step=x]"])
def test_sequence_parse_errors(text):
    with pytest.raises(ParseError):
        parse_seq(text)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as info:
        parse_seq("[1,2; tail=0; bogus]")
    assert info.value.position is not None


@given(int_seqs())
def test_partial_sums_and_differences_are_inverse(seq):
    assert seq.partial_sums().differences().same_as(seq)


def test_partial_sums_of_a_drifting_tail_are_undecidable():
    with pytest.raises(UndecidableDescriptor):
        WeightSeq.of([1], -1, -1).partial_sums()


def test_indicator_and_value_locus():
    seq = WeightSeq.indicator(SetDescriptor.odds(), -1, 0)
    assert seq.window(4) == tuple(ExtScalar.rational(v) for v in (-1, 0, -1, 0))
    assert seq.value_locus(-1) == SetDescriptor.odds()
    assert WeightSeq.of([0, 3], -1, -1).value_locus(-3) == SetDescriptor.finite([5])


def test_sequence_shapes():
    assert WeightSeq.of([1, 0, 2]).is_finitely_supported
    assert WeightSeq.of([1, 0, 2]).finite_sum() == ExtScalar.rational(3)
    assert not WeightSeq.constant(1).is_finitely_supported
    assert WeightSeq.of([1], 1).same_as(WeightSeq.constant(1))
    with pytest.raises(UndecidableDescriptor):
        WeightSeq.constant(1).finite_sum()


def test_int_sets_of_a_sequence():
    integral, plus, minus = int_sets(parse_seq("[1,2,g0; tail=-1]"))
    assert plus == SetDescriptor.finite([1, 2])
    assert minus == SetDescriptor.finite([1, 2, 3]).complement()
    assert integral == SetDescriptor.finite([3]).complement()


@given(int_seqs(), st.integers(1, 8), st.integers(-3, 3))
def test_with_entry_changes_one_index(seq, i, value):
    changed = seq.with_entry(i, value)
    assert changed.entry(i) == ExtScalar.rational(value)
    assert all(changed.entry(j) == seq.entry(j) for j in range(1, 12) if j != i)


# Partitions


def test_partition_dominance():
    assert Partition.of(3).dominates(Partition.of(2, 1))
    assert Partition.of(2, 1).dominates(Partition.of(1, 1, 1))
    assert not Partition.of(2, 1).dominates(Partition.of(3))
    assert not Partition.of(2).dominates(Partition.of(1, 1, 1))
    assert Partition.from_values([0, 1, 2, 0]) == Partition.of(2, 1)
    assert str(Partition.parse("(2,1)")) == "[2,1]"


def test_partition_rejects_increasing_parts():
    with pytest.raises(ValueError):
        Partition.of(1, 2)
    with pytest.raises(ParseError):
        Partition.parse("(a)")
