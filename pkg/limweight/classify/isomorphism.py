from fractions import Fraction
from typing import Optional

from limweight.core.config.constants import ERROR_MESSAGES
from limweight.core.exceptions import RankTooSmall
from limweight.weights import ExtScalar, Weight, abs_sum

from .equivalence import sim_sl, sim_sp
from .finiteness import warn_outside_range


def _exceptional_pair(mu: Weight, nu: Weight) -> bool:
    zero, minus_one = Weight.zero(mu.rank), Weight.constant(mu.rank, -1)
    return {mu, nu} == {zero, minus_one}


def iso_Xsl(mu: Weight, nu: Weight, n: Optional[int] = None, as_gl: bool = True) -> bool:
    """gl(n+1)-isomorphism is ~_sl; sl(n+1) adds the pair {0, (-1,...,-1)}"""
    n = mu.rank - 1 if n is None else n
    if as_gl:
        return sim_sl(mu, nu)
    if n <= 1:
        raise RankTooSmall(f"sl({n + 1}): {ERROR_MESSAGES['RANK_TOO_SMALL']}")
    return sim_sl(mu, nu) or _exceptional_pair(mu, nu)


def iso_Xsp(mu: Weight, nu: Weight) -> bool:
    if mu.rank <= 3:
        warn_outside_range("iso_Xsp", mu.rank, 3)
    return sim_sp(mu, nu)


def normalize_to_mu(weight: Weight, c, n: Optional[int] = None) -> Weight:
    """nu_i = lambda_i + (c - |lambda|) / (n + 1)"""
    n = weight.rank - 1 if n is None else n
    share = (ExtScalar.coerce(c) - abs_sum(weight)) / (n + 1)
    return Weight(tuple(x + share for x in weight))
