"""Seeded random descriptors for the verification suites"""
from fractions import Fraction
from random import Random
from typing import List

from limweight.rootdata import Block, BlockKind, BorelDescriptor
from limweight.weights import ExtScalar, SetDescriptor, Weight, WeightSeq


def random_scalar(rng: Random, generic_rate: float = 0.25, tag: int = 0) -> ExtScalar:
    if rng.random() < generic_rate:
        return ExtScalar.generic(tag, rng.randint(-2, 2))
    if rng.random() < 0.1:
        return ExtScalar(Fraction(rng.randint(-5, 5), 2))
    return ExtScalar(Fraction(rng.randint(-3, 3)))


def random_weight(rng: Random, rank: int, generic_rate: float = 0.25) -> Weight:
    """Entries are small integers, halves, or generics with distinct tags"""
    return Weight(tuple(random_scalar(rng, generic_rate, tag=i) for i in range(rank)))


def random_set(rng: Random, semi_infinite: bool = False) -> SetDescriptor:
    while True:
        period = rng.randint(1, 4)
        pattern = tuple(rng.random() < 0.5 for _ in range(period))
        start = rng.randint(1, 6)
        below = frozenset(i for i in range(1, start) if rng.random() < 0.5)
        found = SetDescriptor(below, frozenset(), period, pattern, start)
        if not semi_infinite or found.is_semi_infinite:
            return found


def finite_flip(rng: Random, subset: SetDescriptor, size: int = 3) -> SetDescriptor:
    """``subset`` with a few random indices toggled"""
    return subset ^ SetDescriptor.finite(rng.sample(range(1, 12), rng.randint(0, size)))


def random_int_seq(rng: Random, low: int = -3, high: int = 3, tail_values: List[int] = None) -> WeightSeq:
    prefix = tuple(rng.randint(low, high) for _ in range(rng.randint(0, 4)))
    choices = tail_values if tail_values is not None else list(range(low, high + 1))
    tail = tuple(rng.choice(choices) for _ in range(rng.randint(1, 2)))
    return WeightSeq.of(prefix, tail)


def random_seq(rng: Random) -> WeightSeq:
    """Integer, half-integer or single-generic sequences with periodic tails"""
    shape = rng.random()
    if shape < 0.4:
        return random_int_seq(rng)
    if shape < 0.7:
        prefix = [rng.randint(-2, 2) for _ in range(rng.randint(0, 3))]
        position = rng.randint(0, len(prefix))
        prefix.insert(position, ExtScalar.generic(rng.randint(0, 6), rng.randint(-1, 1)))
        return WeightSeq.of(prefix, rng.choice([0, -1]))
    return random_int_seq(rng, 0, 3) if rng.random() < 0.5 else random_int_seq(rng, -4, -1)


def nearby_seq(rng: Random, seq: WeightSeq, moves: int = 2) -> WeightSeq:
    """``seq`` moved by a few finitely supported integer steps of total zero"""
    for _ in range(rng.randint(0, moves)):
        i, j = rng.sample(range(1, 8), 2)
        seq = seq.with_entry(i, seq.entry(i) + 1).with_entry(j, seq.entry(j) - 1)
    return seq


def random_borel(rng: Random, signed: bool = False) -> BorelDescriptor:
    """A splitting order without dense blocks, signed for the B, C and D families"""
    sign = random_set(rng) if signed else None
    shape = rng.randint(0, 3)
    if shape == 0:
        return BorelDescriptor.natural(sign)
    if shape == 1:
        return BorelDescriptor.reversed_natural(sign)
    if shape == 2:
        odds, evens = SetDescriptor.odds(), SetDescriptor.evens()
        first, second = (odds, evens) if rng.random() < 0.5 else (evens, odds)
        return BorelDescriptor((Block(BlockKind.ASC, first), Block(BlockKind.DESC, second)), sign)
    size = rng.randint(1, 4)
    head = rng.sample(range(1, size + 1), size)
    rest = SetDescriptor.finite(range(1, size + 1)).complement()
    kind = BlockKind.ASC if rng.random() < 0.5 else BlockKind.DESC
    return BorelDescriptor((Block(BlockKind.SEQ, tuple(head)), Block(kind, rest)), sign)
