"""
Support oracles of the limit modules.

Each oracle answers whether a weight (a ``WeightSeq`` or a finite ``Weight``
read with zero tail) lies in the support. Type A weights are taken on gl
representatives.
"""
from typing import Union

from loguru import logger

from limweight.classify import sim_sl, sim_sp
from limweight.core.exceptions import MixedGenericTags, NotSemiInfinite, NotSignVector, UndecidableDescriptor
from limweight.rootdata import SupportOracle, natural_support
from limweight.weights import HALF, Partition, Weight, WeightSeq

from .descriptors import LimitModuleDescriptor, ModuleKind
from .equivalences import approx_equiv, sign_locus, sinf_equiv, spinor_equiv_B, spinor_equiv_D

AnyWeight = Union[Weight, WeightSeq]


def as_seq(weight: AnyWeight) -> WeightSeq:
    if isinstance(weight, WeightSeq):
        return weight
    return WeightSeq(weight.entries)


def _negated(lam: WeightSeq) -> WeightSeq:
    return WeightSeq.constant(0) - lam


def _exterior(subset):
    def predicate(lam: WeightSeq) -> bool:
        ones = lam.value_locus(1)
        if not (ones | lam.value_locus(0)).complement().is_empty:
            return False
        try:
            return approx_equiv(ones, subset)
        except NotSemiInfinite:
            return False
    return predicate


def _sinf(a: WeightSeq):
    def predicate(lam: WeightSeq) -> bool:
        if lam.step or not all(x.is_nonneg_integer for x in lam.prefix + lam.tail):
            return False
        return sinf_equiv(lam.partial_sums(), a)
    return predicate


def _spart(partition: Partition):
    def predicate(lam: WeightSeq) -> bool:
        if not lam.is_finitely_supported or not all(x.is_nonneg_integer for x in lam.prefix):
            return False
        found = Partition.from_values(x.as_int() for x in lam.prefix)
        return partition.dominates(found)
    return predicate


def _spinor(subset, related):
    def predicate(lam: WeightSeq) -> bool:
        try:
            return related(sign_locus(lam), subset)
        except NotSignVector:
            return False
    return predicate


def _dual(predicate):
    return lambda lam: predicate(_negated(lam))


def support_oracle(d: LimitModuleDescriptor) -> SupportOracle:
    """Membership oracle for the support of the module ``d``"""
    kind = d.kind
    if kind is ModuleKind.TRIVIAL:
        predicate = lambda lam: lam.is_finitely_supported and all(x.is_zero for x in lam.prefix)
    elif kind is ModuleKind.NATURAL:
        natural = natural_support(d.algebra.lie_type)
        predicate = natural.contains
    elif kind is ModuleKind.CONATURAL:
        natural = natural_support(d.algebra.lie_type)
        predicate = lambda lam: _negated(lam) in natural
    elif kind is ModuleKind.SEMI_INF_EXTERIOR:
        predicate = _exterior(d.subset)
    elif kind is ModuleKind.SINF_V:
        predicate = _sinf(d.seq)
    elif kind is ModuleKind.SINF_V_STAR:
        predicate = _dual(_sinf(d.seq))
    elif kind is ModuleKind.SPART_V:
        predicate = _spart(d.partition)
    elif kind is ModuleKind.SPART_V_STAR:
        predicate = _dual(_spart(d.partition))
    elif kind is ModuleKind.X_SL:
        predicate = lambda lam: sim_sl(lam, d.seq)
    elif kind is ModuleKind.X_SP:
        predicate = lambda lam: sim_sp(lam.shifted_by(-HALF), d.seq)
    elif kind is ModuleKind.SPINOR_B:
        predicate = _spinor(d.subset, spinor_equiv_B)
    elif kind is ModuleKind.SPINOR_D:
        predicate = _spinor(d.subset, spinor_equiv_D)
    else:
        raise UndecidableDescriptor(f"no support oracle for {kind.value}")

    def guarded(weight: AnyWeight) -> bool:
        lam = as_seq(weight)
        try:
            return predicate(lam)
        except MixedGenericTags:
            return False
        except UndecidableDescriptor as e:
            logger.debug("support test of {} for {} undecided: {}", lam, d, e)
            raise

    return SupportOracle(guarded, f"Supp {d} over {d.algebra.value}(inf)")
