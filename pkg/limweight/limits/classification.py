"""
Classification of simple bounded modules over sl(inf), o(inf) and sp(inf).

``classify_sl`` turns a weight sequence into the family it belongs to;
``canonical`` picks one representative per isomorphism shape so that
``iso_limit`` only compares data of equal kinds.
"""
from typing import Optional, Tuple

from loguru import logger

from limweight.classify import sim_sl, sim_sp
from limweight.core.exceptions import IncomparableCartan, NotIntegrable
from limweight.weights import Partition, SetDescriptor, WeightSeq, int_sets

from .descriptors import Algebra, LimitModuleDescriptor, ModuleKind
from .equivalences import approx_equiv, sinf_equiv, spinor_equiv_B, spinor_equiv_D


def _symmetric_power(m: int, dual: bool) -> LimitModuleDescriptor:
    if m == 0:
        return LimitModuleDescriptor.trivial(Algebra.SL)
    if m == 1:
        return LimitModuleDescriptor.conatural() if dual else LimitModuleDescriptor.natural(Algebra.SL)
    return LimitModuleDescriptor.spart(Partition.of(m), dual)


def classify_sl(mu: WeightSeq) -> Tuple[LimitModuleDescriptor, Optional[str]]:
    """The module X_sl(mu) as a descriptor, with its integrable shape (i)-(v) when it has one"""
    _, plus, minus = int_sets(mu)
    everything = SetDescriptor.everything()
    if plus == everything:
        if mu.is_finitely_supported:
            found = _symmetric_power(mu.finite_sum().as_int(), dual=False), "iv"
        else:
            found = LimitModuleDescriptor.sinf(mu.partial_sums()), "ii"
    elif minus == everything:
        shifted = WeightSeq.constant(-1) - mu
        if shifted.is_finitely_supported:
            found = _symmetric_power(shifted.finite_sum().as_int(), dual=True), "v"
        else:
            found = LimitModuleDescriptor.sinf(shifted.partial_sums(), dual=True), "iii"
    else:
        found = LimitModuleDescriptor.x_sl(mu), None
    logger.debug("X_sl{} classified as {} ({})", mu, found[0], found[1])
    return found


def reconstruct_mu(d: LimitModuleDescriptor) -> Optional[WeightSeq]:
    """A sequence mu with X_sl(mu) isomorphic to ``d``, or None outside the image of classify_sl"""
    kind = d.kind
    if d.algebra is not Algebra.SL:
        return None
    if kind is ModuleKind.TRIVIAL:
        return WeightSeq.constant(0)
    if kind is ModuleKind.NATURAL:
        return WeightSeq.of([1])
    if kind is ModuleKind.CONATURAL:
        return WeightSeq.of([-2], -1)
    if kind is ModuleKind.SPART_V and d.partition.length <= 1:
        return WeightSeq.of([d.partition.size])
    if kind is ModuleKind.SPART_V_STAR and d.partition.length <= 1:
        return WeightSeq.of([-1 - d.partition.size], -1)
    if kind is ModuleKind.SINF_V:
        return d.seq.differences()
    if kind is ModuleKind.SINF_V_STAR:
        return WeightSeq.constant(-1) - d.seq.differences()
    if kind is ModuleKind.X_SL:
        return d.seq
    return None


def canonical(d: LimitModuleDescriptor) -> LimitModuleDescriptor:
    """Integrable X_sl go to their integrable family; S^(1) and S^() collapse to V and C"""
    if d.kind is ModuleKind.X_SL:
        return classify_sl(d.seq)[0]
    if d.kind in (ModuleKind.SPART_V, ModuleKind.SPART_V_STAR) and d.partition.length <= 1:
        return _symmetric_power(d.partition.size, dual=d.kind is ModuleKind.SPART_V_STAR)
    return d


def iso_limit(d1: LimitModuleDescriptor, d2: LimitModuleDescriptor) -> bool:
    if d1.algebra is not d2.algebra:
        raise IncomparableCartan(
            f"{d1} over {d1.algebra.value}(inf) and {d2} over {d2.algebra.value}(inf) live over different algebras"
        )
    d1, d2 = canonical(d1), canonical(d2)
    if d1.kind is not d2.kind:
        return False
    kind = d1.kind
    if kind in (ModuleKind.TRIVIAL, ModuleKind.NATURAL, ModuleKind.CONATURAL):
        return True
    if kind is ModuleKind.SEMI_INF_EXTERIOR:
        return approx_equiv(d1.subset, d2.subset)
    if kind in (ModuleKind.SINF_V, ModuleKind.SINF_V_STAR):
        return sinf_equiv(d1.seq, d2.seq)
    if kind in (ModuleKind.SPART_V, ModuleKind.SPART_V_STAR):
        return d1.partition == d2.partition
    if kind is ModuleKind.X_SL:
        return sim_sl(d1.seq, d2.seq)
    if kind is ModuleKind.X_SP:
        return sim_sp(d1.seq, d2.seq)
    if kind is ModuleKind.SPINOR_B:
        return spinor_equiv_B(d1.subset, d2.subset)
    return spinor_equiv_D(d1.subset, d2.subset)


_FIVE = {
    ModuleKind.SEMI_INF_EXTERIOR: "i",
    ModuleKind.SINF_V: "ii",
    ModuleKind.SINF_V_STAR: "iii",
    ModuleKind.SPART_V: "iv",
    ModuleKind.NATURAL: "iv",
    ModuleKind.TRIVIAL: "iv",
    ModuleKind.SPART_V_STAR: "v",
    ModuleKind.CONATURAL: "v",
}


def five_type(d: LimitModuleDescriptor) -> str:
    """Shape (i)-(v) of the finite-rank highest weights of an integrable sl(inf) module"""
    if d.algebra is not Algebra.SL:
        raise NotIntegrable(f"{d} is not an sl(inf) module")
    d = canonical(d)
    if d.kind not in _FIVE:
        raise NotIntegrable(f"{d} is not integrable")
    return _FIVE[d.kind]


MINUSCULE = {
    Algebra.SL: {
        ModuleKind.TRIVIAL, ModuleKind.NATURAL, ModuleKind.CONATURAL,
        ModuleKind.SEMI_INF_EXTERIOR, ModuleKind.SINF_V, ModuleKind.SINF_V_STAR,
    },
    Algebra.OB: {ModuleKind.TRIVIAL, ModuleKind.NATURAL, ModuleKind.SPINOR_B},
    Algebra.OD: {ModuleKind.TRIVIAL, ModuleKind.NATURAL, ModuleKind.SPINOR_D},
    Algebra.SP: {ModuleKind.TRIVIAL, ModuleKind.NATURAL},
}


def is_minuscule(d: LimitModuleDescriptor) -> bool:
    """Integrable and multiplicity free"""
    return canonical(d).kind in MINUSCULE[d.algebra]
