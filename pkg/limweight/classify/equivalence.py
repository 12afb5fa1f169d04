"""
The equivalences ~_D (same integrality pattern), ~_sl and ~_sp on finite
weights and on weight sequences.
"""
from typing import Optional, Tuple, Union

from limweight.core.exceptions import MixedGenericTags
from limweight.weights import Weight, WeightSeq, horizon, int_sets

AnyWeight = Union[Weight, WeightSeq]


def _integral_shift(mu: Weight, nu: Weight) -> Optional[Tuple[int, ...]]:
    """mu - nu when it is an integer vector"""
    if mu.rank != nu.rank:
        return None
    shift = []
    for a, b in zip(mu, nu):
        d = a.difference(b)
        if d is None or d.denominator != 1:
            return None
        shift.append(int(d))
    return tuple(shift)


def _seq_shift(mu: WeightSeq, nu: WeightSeq) -> Optional[WeightSeq]:
    """mu - nu when every entry is an integer"""
    try:
        diff = mu - nu
    except MixedGenericTags:
        return None
    length, period = horizon(diff)
    if not all(diff.entry(i).is_integer for i in range(1, length + period + 1)):
        return None
    return diff


def _same_int_plus(mu: AnyWeight, nu: AnyWeight) -> bool:
    a, b = int_sets(mu)[1], int_sets(nu)[1]
    if isinstance(mu, WeightSeq):
        return a.equals(b)
    return a == b


def _same_int_sets(mu: AnyWeight, nu: AnyWeight) -> bool:
    (_, ap, am), (_, bp, bm) = int_sets(mu), int_sets(nu)
    if isinstance(mu, WeightSeq):
        return ap.equals(bp) and am.equals(bm)
    return ap == bp and am == bm


def sim_weyl(mu: AnyWeight, nu: AnyWeight) -> bool:
    """Integral difference and equal Int+ and Int-"""
    if isinstance(mu, WeightSeq):
        return _seq_shift(mu, nu) is not None and _same_int_sets(mu, nu)
    return _integral_shift(mu, nu) is not None and _same_int_sets(mu, nu)


def _lattice_shift(mu: AnyWeight, nu: AnyWeight) -> Optional[Tuple[int, ...]]:
    if isinstance(mu, WeightSeq):
        diff = _seq_shift(mu, nu)
        if diff is None or not diff.is_finitely_supported:
            return None
        return tuple(x.as_int() for x in diff.prefix)
    return _integral_shift(mu, nu)


def sim_sl(mu: AnyWeight, nu: AnyWeight) -> bool:
    """mu - nu in the gl root lattice and Int+(mu) = Int+(nu)"""
    shift = _lattice_shift(mu, nu)
    return shift is not None and sum(shift) == 0 and _same_int_plus(mu, nu)


def sim_sp(mu: AnyWeight, nu: AnyWeight) -> bool:
    """mu - nu in the sp root lattice and Int+(mu) = Int+(nu)"""
    shift = _lattice_shift(mu, nu)
    return shift is not None and sum(shift) % 2 == 0 and _same_int_plus(mu, nu)
