from .annihilators import annihilator_label
from .classification import canonical, classify_sl, five_type, iso_limit, is_minuscule, reconstruct_mu
from .descriptors import (
    Algebra,
    IdealKind,
    IdealLabel,
    LimitModuleDescriptor,
    ModuleKind,
    parse_ideal,
    parse_module,
)
from .equivalences import approx_equiv, omega, sign_locus, sinf_equiv, spinor_equiv_B, spinor_equiv_D
from .highest_weight import HwStatus, HwVerdict, Side, epsilon_seq, finite_shadow, hw_test_limit
from .supports import as_seq, support_oracle

__ALL__ = (
    'Algebra',
    'ModuleKind',
    'LimitModuleDescriptor',
    'IdealLabel',
    'approx_equiv',
    'sinf_equiv',
    'spinor_equiv_B',
    'spinor_equiv_D',
    'support_oracle',
    'classify_sl',
    'iso_limit',
    'hw_test_limit',
    'is_minuscule',
    'annihilator_label',
    'five_type',
)
