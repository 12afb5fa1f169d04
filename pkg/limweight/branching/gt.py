from typing import List

from limweight.degrees.patterns import as_dominant, interlacing
from limweight.weights import Weight


def gt_candidates(weight: Weight) -> List[Weight]:
    """Highest weights of gl(n) occurring in L(weight)|gl(n), each once"""
    top = as_dominant(weight)
    if len(top) < 2:
        return []
    return [Weight.from_values(mu) for mu in interlacing(top)]
