from typing import FrozenSet, Tuple, Union

from .scalar import ExtScalar, ZERO
from .sequence import WeightSeq, constant_difference
from .sets import SetDescriptor
from .weight import Weight

IndexSets = Union[Tuple[FrozenSet[int], FrozenSet[int], FrozenSet[int]],
                  Tuple[SetDescriptor, SetDescriptor, SetDescriptor]]


def int_sets(w: Union[Weight, WeightSeq]) -> IndexSets:
    """(Int, Int+, Int-): indices with entry in Z, Z>=0 and Z<0"""
    if isinstance(w, WeightSeq):
        return (
            w.classify_indices(lambda x: x.is_integer),
            w.classify_indices(lambda x: x.is_nonneg_integer),
            w.classify_indices(lambda x: x.is_neg_integer),
        )
    plus = frozenset(i for i, x in enumerate(w, 1) if x.is_nonneg_integer)
    minus = frozenset(i for i, x in enumerate(w, 1) if x.is_neg_integer)
    return plus | minus, plus, minus


def int_plus(w: Union[Weight, WeightSeq]):
    return int_sets(w)[1]


def int_minus(w: Union[Weight, WeightSeq]):
    return int_sets(w)[2]


def abs_sum(w: Weight) -> ExtScalar:
    """|w|, the sum of the entries"""
    return sum(w.entries, ZERO)


def seq_equal_mod_constant(a: WeightSeq, b: WeightSeq) -> bool:
    return constant_difference(a, b)
