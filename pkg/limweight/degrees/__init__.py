from .bounds import (
    BoundReport,
    LemmaDegReport,
    argmax_weights,
    equal_size_pairs,
    deg_fd,
    lp_rp,
    parabolic_restriction_check,
    verify_lem0,
    verify_lem1,
    verify_lem2,
    verify_lem3,
    verify_lem4,
    verify_lemma_deg,
)
from .patterns import (
    GTPattern,
    balanced_weight,
    dim_fd,
    dominant_weights,
    dual_weight,
    gt_patterns,
    interlacing,
    mult_fd,
    weight_multiplicities,
    weyl_dimension,
)

__ALL__ = (
    'GTPattern',
    'BoundReport',
    'dim_fd',
    'mult_fd',
    'deg_fd',
    'lp_rp',
    'equal_size_pairs',
    'verify_lem0',
    'verify_lem1',
    'verify_lem2',
    'verify_lem3',
    'verify_lem4',
    'verify_lemma_deg',
)
