from .borel import Block, BlockKind, BorelDescriptor, parse_borel, positive_roots
from .lie_type import Family, LieType
from .roots import Root, roots, sorted_roots
from .supports import (
    RootPartition,
    SupportOracle,
    delta_sl_I,
    delta_sp_J,
    lattice_member,
    natural_support,
    partition_roots,
    rho,
)
from .weyl import WeylElement, dot_action, weyl_group

__ALL__ = (
    'LieType',
    'Family',
    'Root',
    'roots',
    'BorelDescriptor',
    'positive_roots',
    'WeylElement',
    'RootPartition',
    'lattice_member',
    'natural_support',
    'rho',
    'dot_action',
    'delta_sl_I',
    'delta_sp_J',
)
