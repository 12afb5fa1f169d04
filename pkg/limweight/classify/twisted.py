from itertools import combinations, product
from typing import Optional, Sequence

from loguru import logger

from limweight.core.config import settings
from limweight.core.exceptions import MixedGenericTags, NotCommuting
from limweight.rootdata import Root, SupportOracle
from limweight.weights import ExtScalar, Weight


def check_commuting(sigma: Sequence[Root]):
    for a, b in combinations(sigma, 2):
        if a == -b or a.sum_root(b) is not None:
            raise NotCommuting(f"root vectors of {a} and {b} do not commute")


def twisted_loc_support(base: SupportOracle, sigma: Sequence[Root], x: Sequence,
                        box: Optional[int] = None) -> SupportOracle:
    """Supp = x_1 a_1 + ... + x_k a_k + Supp L + Z Sigma, searched for m in [-box, box]^k"""
    sigma = list(sigma)
    if not sigma:
        return base
    check_commuting(sigma)
    x = [ExtScalar.coerce(v) for v in x]
    if len(x) != len(sigma):
        raise ValueError("one twist scalar per root")
    box = settings.SEARCH_BOX if box is None else box

    def predicate(weight: Weight) -> bool:
        for shift in product(range(-box, box + 1), repeat=len(sigma)):
            try:
                entries = list(weight.entries)
                for alpha, t, m in zip(sigma, x, shift):
                    for i, c in alpha.coeffs:
                        if c > 0:
                            entries[i - 1] = entries[i - 1] - (t + m).scale(c)
                        else:
                            entries[i - 1] = entries[i - 1] + (t + m).scale(-c)
            except MixedGenericTags:
                continue
            if Weight(tuple(entries)) in base:
                return True
        return False

    names = ",".join(str(a) for a in sigma)
    logger.debug("twisted support over {} within box {}", names, box)
    return SupportOracle(predicate, f"{base.description} twisted by {names} (box {box})")
