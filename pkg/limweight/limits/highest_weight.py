"""
Highest weight and pseudo highest weight tests for limit modules.

Compatibility of a Borel order with an index set is decided on the block
structure of the order; no enumeration of the order is involved.
"""
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence

from loguru import logger

from limweight.classify import HwCertificate, hw_test_Xsl, sim_sp
from limweight.core.exceptions import InvalidBorel, UndecidableDescriptor
from limweight.rootdata import BlockKind, BorelDescriptor
from limweight.weights import ExtScalar, HALF, SetDescriptor, WeightSeq, int_sets

from .classification import canonical
from .descriptors import Algebra, LimitModuleDescriptor, ModuleKind
from .equivalences import omega


class HwStatus(str, Enum):
    HIGHEST_WEIGHT = "HighestWeight"
    PSEUDO = "PseudoHighestWeight"
    NEITHER = "Neither"


class Side(str, Enum):
    ONE_SIDED = "one-sided"
    TWO_SIDED = "two-sided"


@dataclass(frozen=True)
class HwVerdict:
    status: HwStatus
    weight: Optional[WeightSeq] = None
    side: Optional[Side] = None
    i0: Optional[int] = None
    a: Optional[ExtScalar] = None
    detail: str = ""

    @property
    def is_highest_weight(self) -> bool:
        return self.status is HwStatus.HIGHEST_WEIGHT


def _highest(weight: WeightSeq, detail: str = "", **kwargs) -> HwVerdict:
    return HwVerdict(HwStatus.HIGHEST_WEIGHT, weight, detail=detail, **kwargs)


PSEUDO = HwVerdict(HwStatus.PSEUDO, detail="integrable, no highest weight vector")
LOCALLY_FINITE = HwVerdict(HwStatus.PSEUDO, detail="roots of b act locally finitely")
NEITHER = HwVerdict(HwStatus.NEITHER)


def epsilon_seq(i0: Optional[int], a, subset: SetDescriptor) -> WeightSeq:
    """-1 on the set, ``a`` at i0 and 0 elsewhere"""
    seq = WeightSeq.indicator(subset, -1, 0)
    return seq if i0 is None else seq.with_entry(i0, a)


def _side(subset: SetDescriptor) -> Side:
    return Side.TWO_SIDED if subset.is_semi_infinite else Side.ONE_SIDED


# sl(inf), nonintegrable


def _hw_x_sl(mu: WeightSeq, b: BorelDescriptor) -> HwVerdict:
    _, plus, minus = int_sets(mu)
    generic = (plus | minus).complement()
    if not generic.is_finite or generic.cardinality() > 1:
        return NEITHER
    if not b.is_compatible(minus) or not b.is_compatible(minus | generic):
        return NEITHER
    if not generic.is_empty:
        i0 = generic.elements()[0]
        rest = mu.with_entry(i0, 0) + WeightSeq.indicator(minus, 1, 0)
        if rest.is_finitely_supported:
            a = mu.entry(i0) + rest.finite_sum()
            return _highest(epsilon_seq(i0, a, minus), side=_side(minus), i0=i0, a=a)
        return LOCALLY_FINITE

    shifted = mu + WeightSeq.indicator(minus, 1, 0)
    if shifted.is_finitely_supported:
        s = shifted.finite_sum().as_int()
        top, after = b.boundary(minus)
        if s <= 0 and top is not None:
            inner = minus - SetDescriptor.finite([top])
            return _highest(epsilon_seq(top, s - 1, inner), side=_side(inner), i0=top, a=ExtScalar.coerce(s - 1))
        if s >= 0 and after is not None:
            return _highest(epsilon_seq(after, s, minus), side=_side(minus), i0=after, a=ExtScalar.coerce(s))
        if s == 0 and minus.is_semi_infinite:
            return _highest(epsilon_seq(None, 0, minus), side=Side.TWO_SIDED, detail="epsilon(A)")
    return LOCALLY_FINITE


# sp(inf)


def _hw_x_sp(mu: WeightSeq, b: BorelDescriptor) -> HwVerdict:
    if b.sign is None:
        raise InvalidBorel("an sp Borel subalgebra needs a sign map")
    base = WeightSeq.indicator(b.sign, -1, 0)
    if sim_sp(mu, base):
        return _highest(base.shifted_by(HALF), detail="omega")
    top = b.maximal_element()
    if top is not None:
        step = -1 if b.sign_of(top) == 1 else 1
        moved = base.with_entry(top, base.entry(top) + step)
        if sim_sp(mu, moved):
            return _highest(moved.shifted_by(HALF), detail="omega+delta", i0=top)
    _, plus, minus = int_sets(mu)
    if plus == b.sign.complement() and minus == b.sign:
        return LOCALLY_FINITE
    return NEITHER


# Integrable families


def _exterior_cut(subset: SetDescriptor, b: BorelDescriptor) -> Optional[SetDescriptor]:
    """An initial segment of b that differs finitely from ``subset``, if one exists"""
    blocks = b.blocks
    for k in range(len(blocks) + 1):
        head, tail = blocks[:k], blocks[k:]
        if all((blk.members - subset).is_finite for blk in head) and all(
            (blk.members & subset).is_finite for blk in tail
        ):
            union = SetDescriptor.empty()
            for blk in head:
                union = union | blk.members
            return union
    for blk in blocks:
        part = blk.members & subset
        if blk.kind is BlockKind.DENSE and not part.is_finite and not (blk.members - subset).is_finite:
            raise UndecidableDescriptor(f"{subset} cuts the dense block {blk} in an infinite way")
    return None


def _spinor(d: LimitModuleDescriptor, b: BorelDescriptor) -> HwVerdict:
    if b.sign is None:
        raise InvalidBorel("an orthogonal Borel subalgebra needs a sign map")
    difference = b.sign ^ d.subset
    if not difference.is_finite:
        return PSEUDO
    if d.kind is ModuleKind.SPINOR_B or difference.cardinality() % 2 == 0:
        return _highest(omega(b.sign))
    top = b.maximal_element()
    if top is None:
        return PSEUDO
    return _highest(omega(b.sign ^ SetDescriptor.finite([top])), i0=top)


def _partition_weight(indices: Sequence[int], parts: Sequence[int], sign: int) -> WeightSeq:
    seq = WeightSeq.constant(0)
    for i, p in zip(indices, parts):
        seq = seq.with_entry(i, sign * p)
    return seq


def _hw_integrable(d: LimitModuleDescriptor, b: BorelDescriptor) -> HwVerdict:
    kind = d.kind
    if kind is ModuleKind.TRIVIAL:
        return _highest(WeightSeq.constant(0))
    if kind is ModuleKind.NATURAL:
        low = b.minimal_element()
        if low is None:
            return PSEUDO
        sign = 1 if d.algebra is Algebra.SL else b.sign_of(low)
        return _highest(WeightSeq.constant(0).with_entry(low, sign), i0=low)
    if kind is ModuleKind.CONATURAL:
        high = b.maximal_element()
        if high is None:
            return PSEUDO
        return _highest(WeightSeq.constant(0).with_entry(high, -1), i0=high)
    if kind is ModuleKind.SEMI_INF_EXTERIOR:
        cut = _exterior_cut(d.subset, b)
        if cut is None:
            return PSEUDO
        return _highest(WeightSeq.indicator(cut))
    if kind in (ModuleKind.SINF_V, ModuleKind.SINF_V_STAR):
        return PSEUDO
    if kind in (ModuleKind.SPART_V, ModuleKind.SPART_V_STAR):
        parts = d.partition.parts
        if kind is ModuleKind.SPART_V:
            indices, sign = b.first_elements(len(parts)), 1
        else:
            indices, sign = b.last_elements(len(parts)), -1
        if len(indices) < len(parts):
            return PSEUDO
        return _highest(_partition_weight(indices, parts, sign))
    return _spinor(d, b)


def hw_test_limit(d: LimitModuleDescriptor, b: BorelDescriptor) -> HwVerdict:
    """Whether ``d`` is a b-highest weight module, a b-pseudo highest weight module, or neither"""
    d = canonical(d)
    if d.kind is ModuleKind.X_SL:
        verdict = _hw_x_sl(d.seq, b)
    elif d.kind is ModuleKind.X_SP:
        verdict = _hw_x_sp(d.seq, b)
    else:
        verdict = _hw_integrable(d, b)
    logger.debug("{} against {}: {}", d, b, verdict.status.value)
    return verdict


def finite_shadow(mu: WeightSeq, b: BorelDescriptor, ranks: Sequence[int]) -> List[Optional[HwCertificate]]:
    """Certificates of the truncations X_sl(mu^(n+1)) for the restricted orders"""
    return [hw_test_Xsl(mu.truncate(n + 1), b.restricted(n + 1)) for n in ranks]
