# Report schemas emitted by the command surface
from .reports import (
    AnnihilatorReport,
    BoundResult,
    BranchReport,
    CheckOutcome,
    ClassifyReport,
    DegreeReport,
    FiniteRankReport,
    HwReport,
    IsoReport,
    ParseReport,
    SummandReport,
    SupportReport,
    VerifyReport,
)

__ALL__ = (
    'ClassifyReport',
    'SupportReport',
    'BranchReport',
    'SummandReport',
    'DegreeReport',
    'BoundResult',
    'HwReport',
    'IsoReport',
    'AnnihilatorReport',
    'CheckOutcome',
    'VerifyReport',
)
