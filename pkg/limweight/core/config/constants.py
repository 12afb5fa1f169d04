# Constants for limweight

# Exit codes of the command surface
EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_HYPOTHESIS_VIOLATED = 3
EXIT_OTHER_ERROR = 4

# Verification suites, in execution order
SUITES = [
    "core",
    "rootdata",
    "realization",
    "classify",
    "branching",
    "degrees",
    "limits",
    "paper-examples",
]

# Error messages
ERROR_MESSAGES = {
    "MIXED_TAGS": "result is not expressible as a single extended scalar",
    "NOT_DOMINANT": "weight is not dominant integral",
    "NOT_IN_BASIS": "monomial is not a basis monomial of the module",
    "RANK_TOO_SMALL": "rank is below the range where the criterion is known",
}

# Default values
DEFAULT_LEMMA_DEG_DEPTH = 2
DEFAULT_NILPOTENCY_MARGIN = 4
