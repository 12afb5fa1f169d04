from loguru import logger

from limweight.core.exceptions import NotSimpleBounded
from limweight.weights import Partition

from .classification import canonical
from .descriptors import Algebra, IdealKind, IdealLabel, LimitModuleDescriptor, ModuleKind

_ORTHOGONAL_TAG = {Algebra.OB: "B", Algebra.OD: "D"}


def annihilator_label(d: LimitModuleDescriptor) -> IdealLabel:
    """Label of the primitive ideal Ann_U(g) of the module ``d``"""
    d = canonical(d)
    kind, algebra = d.kind, d.algebra
    if algebra is Algebra.SL:
        if kind in (ModuleKind.X_SL, ModuleKind.SINF_V, ModuleKind.SINF_V_STAR):
            label = IdealLabel.ixy(1, 0)
        elif kind is ModuleKind.SEMI_INF_EXTERIOR:
            label = IdealLabel.ixy(0, 1)
        elif kind is ModuleKind.SPART_V:
            label = IdealLabel.ixy(0, 0, lam=d.partition)
        elif kind is ModuleKind.SPART_V_STAR:
            label = IdealLabel.ixy(0, 0, mu=d.partition)
        elif kind is ModuleKind.NATURAL:
            label = IdealLabel.ixy(0, 0, lam=Partition.of(1))
        elif kind is ModuleKind.CONATURAL:
            label = IdealLabel.ixy(0, 0, mu=Partition.of(1))
        elif kind is ModuleKind.TRIVIAL:
            label = IdealLabel.ixy(0, 0)
        else:
            raise NotSimpleBounded(f"{d} is not a simple bounded sl(inf) module")
    elif algebra is Algebra.SP:
        tags = {
            ModuleKind.X_SP: IdealLabel(IdealKind.ISW),
            ModuleKind.NATURAL: IdealLabel(IdealKind.ANNV, tag="sp"),
            ModuleKind.TRIVIAL: IdealLabel(IdealKind.AUG, tag="sp"),
        }
        if kind not in tags:
            raise NotSimpleBounded(f"{d} is not a simple bounded sp(inf) module")
        label = tags[kind]
    else:
        if kind in (ModuleKind.SPINOR_B, ModuleKind.SPINOR_D):
            label = IdealLabel(IdealKind.OSPIN, tag=_ORTHOGONAL_TAG[algebra])
        elif kind is ModuleKind.NATURAL:
            label = IdealLabel(IdealKind.ANNV, tag="o")
        elif kind is ModuleKind.TRIVIAL:
            label = IdealLabel(IdealKind.AUG, tag="o")
        else:
            raise NotSimpleBounded(f"{d} is not a simple bounded o(inf) module")
    logger.debug("Ann {} = {}", d, label)
    return label
