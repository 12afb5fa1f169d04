"""Shared hypothesis strategies and fixtures"""
from fractions import Fraction

import pytest
from hypothesis import strategies as st
from loguru import logger

from limweight.degrees import equal_size_pairs
from limweight.rootdata import Block, BlockKind, BorelDescriptor
from limweight.weights import ExtScalar, SetDescriptor, Weight, WeightSeq

integers = st.integers(min_value=-3, max_value=3)
rationals = st.builds(Fraction, st.integers(-6, 6), st.sampled_from([1, 2, 3]))


def generics(tag: int):
    return st.integers(-2, 2).map(lambda offset: ExtScalar.generic(tag, offset))


scalars = st.one_of(
    integers.map(ExtScalar.rational),
    rationals.map(ExtScalar),
    st.integers(0, 3).flatmap(generics),
)


@st.composite
def weights(draw, min_rank: int = 1, max_rank: int = 4, generic: bool = True):
    """Finite weights; each generic entry gets its own tag"""
    rank = draw(st.integers(min_rank, max_rank))
    entries = []
    for i in range(rank):
        if generic and draw(st.booleans()) and draw(st.booleans()):
            entries.append(draw(generics(i)))
        else:
            entries.append(ExtScalar.rational(draw(integers)))
    return Weight(tuple(entries))


int_weights = weights(generic=False)


@st.composite
def sets(draw, semi_infinite: bool = False):
    period = draw(st.integers(1, 4))
    pattern = tuple(draw(st.lists(st.booleans(), min_size=period, max_size=period)))
    if semi_infinite and (all(pattern) or not any(pattern)):
        period, pattern = 2, (True, False)
    start = draw(st.integers(1, 6))
    below = draw(st.frozensets(st.integers(1, start - 1))) if start > 1 else frozenset()
    return SetDescriptor(below, frozenset(), period, pattern, start)


semi_infinite_sets = sets(semi_infinite=True)
finite_sets = st.sets(st.integers(1, 12), max_size=5).map(SetDescriptor.finite)


def dominant_int_weights(min_rank: int = 1, max_rank: int = 4):
    return st.lists(st.integers(0, 3), min_size=min_rank, max_size=max_rank).map(
        lambda v: tuple(sorted(v, reverse=True))
    )


@st.composite
def interlacing_triples(draw):
    """(lambda, mu', mu'') with mu' != mu'' of equal size in the first GT row of lambda"""
    top = draw(dominant_int_weights(3, 4).filter(equal_size_pairs))
    first, second = draw(st.sampled_from(equal_size_pairs(top)))
    if draw(st.booleans()):
        first, second = second, first
    return top, first, second


@st.composite
def int_seqs(draw, low: int = -3, high: int = 3):
    """Integer sequences with a periodic tail"""
    prefix = draw(st.lists(st.integers(low, high), max_size=4))
    tail = draw(st.lists(st.integers(low, high), min_size=1, max_size=2))
    return WeightSeq.of(prefix, tuple(tail))


@st.composite
def seqs(draw):
    """Integer sequences, possibly with one generic entry"""
    seq = draw(int_seqs())
    if draw(st.booleans()):
        index = draw(st.integers(1, 5))
        seq = seq.with_entry(index, draw(generics(0)))
    return seq


@st.composite
def finite_borels(draw, size: int, signed: bool = False):
    order = draw(st.permutations(list(range(1, size + 1))))
    sign = draw(finite_sets) if signed else None
    return BorelDescriptor.from_permutation(order, sign)


@st.composite
def borels(draw, signed: bool = False):
    """Splitting orders without dense blocks"""
    sign = draw(sets()) if signed else None
    shape = draw(st.integers(0, 3))
    if shape == 0:
        return BorelDescriptor.natural(sign)
    if shape == 1:
        return BorelDescriptor.reversed_natural(sign)
    if shape == 2:
        return BorelDescriptor(
            (Block(BlockKind.ASC, SetDescriptor.odds()), Block(BlockKind.DESC, SetDescriptor.evens())), sign
        )
    size = draw(st.integers(1, 4))
    head = tuple(draw(st.permutations(list(range(1, size + 1)))))
    rest = SetDescriptor.finite(range(1, size + 1)).complement()
    return BorelDescriptor((Block(BlockKind.SEQ, head), Block(BlockKind.ASC, rest)), sign)


@pytest.fixture
def captured_logs():
    """Messages logged through loguru while the test runs"""
    messages = []
    handler = logger.add(messages.append, level="DEBUG", format="{level}:{message}")
    yield messages
    logger.remove(handler)
