from .decompose import (
    BranchCheck,
    BranchSummand,
    branch,
    branch_Xsl,
    branch_Xsp,
    coherence_window,
    limit_coherence,
    neg,
    parity,
    verify_branch,
)
from .gt import gt_candidates
from .s_sets import SSetReport, lemma_s_set_disagreements, s_set, s_set_member, s_set_range

__ALL__ = (
    'BranchSummand',
    'gt_candidates',
    's_set',
    's_set_member',
    'branch_Xsl',
    'branch_Xsp',
    'verify_branch',
    'limit_coherence',
    'coherence_window',
)
