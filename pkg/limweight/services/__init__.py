from .commands import (
    module_from,
    run_annihilator,
    run_bound,
    run_branch,
    run_classify,
    run_degree,
    run_hw,
    run_iso,
    run_parse,
    run_support,
)
from .descriptors import DescriptorKind, guess_kind, int_weight, parse_descriptor, parse_weight_like
from .verification import REGISTRY, Check, run_verification, select_checks

__ALL__ = (
    'run_classify',
    'run_support',
    'run_branch',
    'run_degree',
    'run_bound',
    'run_hw',
    'run_iso',
    'run_annihilator',
    'run_parse',
    'parse_descriptor',
    'run_verification',
)
