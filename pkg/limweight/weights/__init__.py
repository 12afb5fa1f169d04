from .partition import Partition
from .primitives import abs_sum, int_minus, int_plus, int_sets, seq_equal_mod_constant
from .scalar import HALF, ONE, ZERO, ExtScalar, generic_symbol
from .sequence import WeightSeq, constant_difference, horizon, parse_seq
from .sets import SetDescriptor, parse_set
from .weight import Weight

__ALL__ = (
    'ExtScalar',
    'Weight',
    'WeightSeq',
    'SetDescriptor',
    'Partition',
    'int_sets',
    'abs_sum',
    'seq_equal_mod_constant',
)
