"""
Direct-limit module descriptors and annihilator labels.

A descriptor names a simple bounded weight module of sl(inf), o(inf) or
sp(inf) by its family and the data the family is parametrized by. Text forms
follow the command grammar: ``C``, ``V``, ``Vstar``, ``Lambda{...}``,
``SinfV[...]``, ``SinfVstar[...]``, ``S(2,1)``, ``Sstar(2,1)``, ``X[...]``,
``SpinB{...}`` and ``SpinD{...}``; the algebra is carried separately.
"""
import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from limweight.core.exceptions import NotSemiInfinite, NotSimpleBounded, ParseError
from limweight.rootdata import Family, LieType
from limweight.weights import Partition, SetDescriptor, WeightSeq, int_sets, parse_seq, parse_set


class Algebra(str, Enum):
    SL = "sl"
    OB = "o-b"
    OD = "o-d"
    SP = "sp"

    @property
    def lie_type(self) -> LieType:
        family = {"sl": Family.A, "o-b": Family.B, "o-d": Family.D, "sp": Family.C}[self.value]
        return LieType(family)

    @property
    def is_orthogonal(self) -> bool:
        return self in (Algebra.OB, Algebra.OD)


class ModuleKind(str, Enum):
    TRIVIAL = "Trivial"
    NATURAL = "Natural"
    CONATURAL = "Conatural"
    SEMI_INF_EXTERIOR = "SemiInfExterior"
    SINF_V = "SInfV"
    SINF_V_STAR = "SInfVStar"
    SPART_V = "SPartV"
    SPART_V_STAR = "SPartVStar"
    X_SL = "XSlInf"
    X_SP = "XSpInf"
    SPINOR_B = "SpinorB"
    SPINOR_D = "SpinorD"


# Families available over each algebra
KINDS = {
    Algebra.SL: {
        ModuleKind.TRIVIAL, ModuleKind.NATURAL, ModuleKind.CONATURAL,
        ModuleKind.SEMI_INF_EXTERIOR, ModuleKind.SINF_V, ModuleKind.SINF_V_STAR,
        ModuleKind.SPART_V, ModuleKind.SPART_V_STAR, ModuleKind.X_SL,
    },
    Algebra.OB: {ModuleKind.TRIVIAL, ModuleKind.NATURAL, ModuleKind.SPINOR_B},
    Algebra.OD: {ModuleKind.TRIVIAL, ModuleKind.NATURAL, ModuleKind.SPINOR_D},
    Algebra.SP: {ModuleKind.TRIVIAL, ModuleKind.NATURAL, ModuleKind.X_SP},
}

SET_KINDS = {ModuleKind.SEMI_INF_EXTERIOR, ModuleKind.SPINOR_B, ModuleKind.SPINOR_D}
SEQ_KINDS = {ModuleKind.SINF_V, ModuleKind.SINF_V_STAR, ModuleKind.X_SL, ModuleKind.X_SP}
PARTITION_KINDS = {ModuleKind.SPART_V, ModuleKind.SPART_V_STAR}
INTEGRABLE_SL_KINDS = KINDS[Algebra.SL] - {ModuleKind.X_SL}


def check_increasing(a: WeightSeq) -> None:
    """a_n in Z>=0, weakly increasing and unbounded"""
    length = len(a.prefix) + 2 * a.period + 1
    values = [a.entry(i) for i in range(1, length + 1)]
    if not all(x.is_nonneg_integer for x in values):
        raise NotSimpleBounded(f"{a}: entries of an S^inf sequence are non-negative integers")
    ints = [x.as_int() for x in values]
    if any(x > y for x, y in zip(ints, ints[1:])) or a.step <= 0:
        raise NotSimpleBounded(f"{a}: an S^inf sequence increases without bound")


@dataclass(frozen=True)
class LimitModuleDescriptor:
    algebra: Algebra
    kind: ModuleKind
    subset: Optional[SetDescriptor] = None
    seq: Optional[WeightSeq] = None
    partition: Optional[Partition] = None

    def __post_init__(self):
        object.__setattr__(self, "algebra", Algebra(self.algebra))
        object.__setattr__(self, "kind", ModuleKind(self.kind))
        if self.kind not in KINDS[self.algebra]:
            raise NotSimpleBounded(f"no {self.kind.value} module over {self.algebra.value}(inf)")
        if self.kind in SET_KINDS and self.subset is None:
            raise ValueError(f"{self.kind.value} needs a set")
        if self.kind in SEQ_KINDS and self.seq is None:
            raise ValueError(f"{self.kind.value} needs a sequence")
        if self.kind in PARTITION_KINDS and self.partition is None:
            raise ValueError(f"{self.kind.value} needs a partition")
        if self.kind is ModuleKind.SEMI_INF_EXTERIOR and not self.subset.is_semi_infinite:
            raise NotSemiInfinite(f"{self.subset} is not semi-infinite")
        if self.kind in (ModuleKind.SINF_V, ModuleKind.SINF_V_STAR):
            check_increasing(self.seq)

    # Constructors

    @classmethod
    def trivial(cls, algebra: Algebra) -> "LimitModuleDescriptor":
        return cls(algebra, ModuleKind.TRIVIAL)

    @classmethod
    def natural(cls, algebra: Algebra) -> "LimitModuleDescriptor":
        return cls(algebra, ModuleKind.NATURAL)

    @classmethod
    def conatural(cls) -> "LimitModuleDescriptor":
        return cls(Algebra.SL, ModuleKind.CONATURAL)

    @classmethod
    def exterior(cls, subset: SetDescriptor) -> "LimitModuleDescriptor":
        return cls(Algebra.SL, ModuleKind.SEMI_INF_EXTERIOR, subset=subset)

    @classmethod
    def sinf(cls, a: WeightSeq, dual: bool = False) -> "LimitModuleDescriptor":
        return cls(Algebra.SL, ModuleKind.SINF_V_STAR if dual else ModuleKind.SINF_V, seq=a)

    @classmethod
    def spart(cls, partition: Partition, dual: bool = False) -> "LimitModuleDescriptor":
        return cls(Algebra.SL, ModuleKind.SPART_V_STAR if dual else ModuleKind.SPART_V, partition=partition)

    @classmethod
    def x_sl(cls, mu: WeightSeq) -> "LimitModuleDescriptor":
        return cls(Algebra.SL, ModuleKind.X_SL, seq=mu)

    @classmethod
    def x_sp(cls, mu: WeightSeq) -> "LimitModuleDescriptor":
        return cls(Algebra.SP, ModuleKind.X_SP, seq=mu)

    @classmethod
    def spinor(cls, subset: SetDescriptor, cartan: str = "B") -> "LimitModuleDescriptor":
        if cartan.upper() == "B":
            return cls(Algebra.OB, ModuleKind.SPINOR_B, subset=subset)
        return cls(Algebra.OD, ModuleKind.SPINOR_D, subset=subset)

    @classmethod
    def parse(cls, text: str, algebra: Algebra) -> "LimitModuleDescriptor":
        return parse_module(text, algebra)

    # Shape

    @property
    def is_integrable(self) -> bool:
        if self.kind is ModuleKind.X_SP:
            return False
        if self.kind is ModuleKind.X_SL:
            _, plus, minus = int_sets(self.seq)
            everything = SetDescriptor.everything()
            return plus == everything or minus == everything
        return True

    def __str__(self) -> str:
        kind = self.kind
        if kind is ModuleKind.TRIVIAL:
            return "C"
        if kind is ModuleKind.NATURAL:
            return "V"
        if kind is ModuleKind.CONATURAL:
            return "Vstar"
        if kind is ModuleKind.SEMI_INF_EXTERIOR:
            return f"Lambda{self.subset}"
        if kind is ModuleKind.SINF_V:
            return f"SinfV{self.seq}"
        if kind is ModuleKind.SINF_V_STAR:
            return f"SinfVstar{self.seq}"
        if kind is ModuleKind.SPART_V:
            return "S(" + ",".join(str(p) for p in self.partition.parts) + ")"
        if kind is ModuleKind.SPART_V_STAR:
            return "Sstar(" + ",".join(str(p) for p in self.partition.parts) + ")"
        if kind in (ModuleKind.X_SL, ModuleKind.X_SP):
            return f"X{self.seq}"
        if kind is ModuleKind.SPINOR_B:
            return f"SpinB{self.subset}"
        return f"SpinD{self.subset}"


_MODULE = re.compile(r"\s*(C|Vstar|V|Lambda|SinfVstar|SinfV|SpinB|SpinD|Sstar|S|X)(.*)", re.S)


def _partition(body: str, text: str) -> Partition:
    body = body.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ParseError("a partition is written S(2,1)", text.find(body), text)
    return Partition.parse(body)


def parse_module(text: str, algebra: Algebra) -> LimitModuleDescriptor:
    """Parse a module descriptor over the given algebra"""
    algebra = Algebra(algebra)
    m = _MODULE.fullmatch(text)
    if m is None:
        raise ParseError(f"unknown module {text.strip()!r}", 0, text)
    head, body = m.group(1), m.group(2).strip()
    offset = text.find(head) + len(head)
    try:
        if head in ("C", "V", "Vstar"):
            if body:
                raise ParseError(f"unexpected {body!r}", offset, text)
            kind = {"C": ModuleKind.TRIVIAL, "V": ModuleKind.NATURAL, "Vstar": ModuleKind.CONATURAL}[head]
            if kind is ModuleKind.CONATURAL and algebra is not Algebra.SL:
                kind = ModuleKind.NATURAL
            return LimitModuleDescriptor(algebra, kind)
        if head == "Lambda":
            return LimitModuleDescriptor(algebra, ModuleKind.SEMI_INF_EXTERIOR, subset=parse_set(body))
        if head in ("SinfV", "SinfVstar"):
            kind = ModuleKind.SINF_V if head == "SinfV" else ModuleKind.SINF_V_STAR
            return LimitModuleDescriptor(algebra, kind, seq=parse_seq(body))
        if head in ("S", "Sstar"):
            kind = ModuleKind.SPART_V if head == "S" else ModuleKind.SPART_V_STAR
            return LimitModuleDescriptor(algebra, kind, partition=_partition(body, text))
        if head == "X":
            kind = ModuleKind.X_SP if algebra is Algebra.SP else ModuleKind.X_SL
            return LimitModuleDescriptor(algebra, kind, seq=parse_seq(body))
        kind = ModuleKind.SPINOR_B if head == "SpinB" else ModuleKind.SPINOR_D
        return LimitModuleDescriptor(algebra, kind, subset=parse_set(body))
    except ParseError as e:
        raise ParseError(str(e), offset, text)
    except (NotSimpleBounded, NotSemiInfinite, ValueError) as e:
        raise ParseError(str(e), offset, text)


# Ideal labels


class IdealKind(str, Enum):
    IXY = "Ixy"
    ISW = "Isw"
    ZERO = "Zero"
    OSPIN = "OSpin"
    ANNV = "AnnV"
    AUG = "Aug"


@dataclass(frozen=True)
class IdealLabel:
    kind: IdealKind
    x: int = 0
    y: int = 0
    lam: Partition = Partition()
    mu: Partition = Partition()
    tag: str = ""

    def __post_init__(self):
        object.__setattr__(self, "kind", IdealKind(self.kind))
        if self.x < 0 or self.y < 0:
            raise ValueError("I(x,y;..) takes non-negative x and y")

    @classmethod
    def ixy(cls, x: int, y: int, lam: Partition = Partition(), mu: Partition = Partition()) -> "IdealLabel":
        return cls(IdealKind.IXY, x, y, lam, mu)

    @classmethod
    def parse(cls, text: str) -> "IdealLabel":
        return parse_ideal(text)

    def __str__(self) -> str:
        if self.kind is IdealKind.IXY:
            return f"I({self.x},{self.y};{self.lam};{self.mu})"
        if self.kind is IdealKind.ISW:
            return "Isw"
        if self.kind is IdealKind.ZERO:
            return "0"
        return f"{self.kind.value}({self.tag})"


_IXY = re.compile(r"\s*I\(\s*(\d+)\s*,\s*(\d+)\s*;\s*(\[[^\]]*\])\s*;\s*(\[[^\]]*\])\s*\)\s*")
_TAGGED = re.compile(r"\s*(OSpin|AnnV|Aug)\(\s*(B|D|o|sp|sl)\s*\)\s*")


def parse_ideal(text: str) -> IdealLabel:
    """Parse ``I(1,0;[];[])``, ``Isw``, ``0``, ``OSpin(B)``, ``AnnV(sp)`` or ``Aug(o)``"""
    stripped = text.strip()
    if stripped == "Isw":
        return IdealLabel(IdealKind.ISW)
    if stripped == "0":
        return IdealLabel(IdealKind.ZERO)
    m = _IXY.fullmatch(text)
    if m:
        return IdealLabel.ixy(int(m.group(1)), int(m.group(2)), Partition.parse(m.group(3)), Partition.parse(m.group(4)))
    m = _TAGGED.fullmatch(text)
    if m:
        return IdealLabel(IdealKind(m.group(1)), tag=m.group(2))
    raise ParseError(f"not an ideal label: {stripped!r}", 0, text)
