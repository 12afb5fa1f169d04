"""
Highest weight criteria for X_sl(mu) and X_sp(mu) relative to an arbitrary
Borel subalgebra at finite rank.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from limweight.core.exceptions import InvalidBorel, MixedGenericTags
from limweight.rootdata import BorelDescriptor
from limweight.weights import ExtScalar, HALF, Weight, abs_sum

from .equivalence import sim_sl, sim_sp


@dataclass(frozen=True)
class HwCertificate:
    kind: str
    hw_weight: Weight
    i0: Optional[int] = None
    a: Optional[ExtScalar] = None

    def __str__(self) -> str:
        if self.kind == "SlCert":
            return f"SlCert(i0={self.i0}, a={self.a}) hw={self.hw_weight}"
        return f"{self.kind} hw={self.hw_weight}"


def epsilon_weight(borel: BorelDescriptor, size: int, i0: int, a) -> Weight:
    """-1 on indices before i0, a at i0, 0 after i0"""
    return Weight(tuple(
        ExtScalar.coerce(a) if i == i0 else ExtScalar(Fraction(-1 if borel.precedes(i, i0) else 0))
        for i in range(1, size + 1)
    ))


def hw_test_Xsl(mu: Weight, borel: BorelDescriptor, n: Optional[int] = None) -> Optional[HwCertificate]:
    """First i0 in order with mu ~_sl epsilon(i0, a); a is fixed by |mu|"""
    size = mu.rank if n is None else n + 1
    try:
        total = abs_sum(mu)
    except MixedGenericTags:
        return None
    for before, i0 in enumerate(borel.order_window(size)):
        a = total + before
        candidate = epsilon_weight(borel, size, i0, a)
        if sim_sl(mu, candidate):
            return HwCertificate("SlCert", candidate, i0, a)
    return None


def sp_borel_data(borel: BorelDescriptor, n: int) -> Tuple[Dict[int, int], int, Weight, Weight]:
    """(sigma, j0, omega, delta) for a Borel subalgebra of sp(2n)"""
    if borel.sign is None:
        raise InvalidBorel("an sp Borel subalgebra needs a sign map")
    sigma = {i: borel.sign_of(i) for i in range(1, n + 1)}
    j0 = borel.order_window(n)[-1]
    omega = Weight(tuple(-1 if sigma[i] == 1 else 0 for i in range(1, n + 1)))
    delta = Weight.unit(n, j0, -1 if sigma[j0] == 1 else 1)
    return sigma, j0, omega, delta


def hw_test_Xsp(mu: Weight, borel: BorelDescriptor, n: Optional[int] = None) -> Optional[HwCertificate]:
    n = mu.rank if n is None else n
    _, _, omega, delta = sp_borel_data(borel, n)
    shift = (HALF,) * n
    if sim_sp(mu, omega):
        return HwCertificate("SpCertOmega", omega + shift)
    if sim_sp(mu, omega + delta):
        return HwCertificate("SpCertOmegaDelta", omega + delta + shift)
    return None
