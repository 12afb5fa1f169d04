"""Typed parsing of every descriptor grammar the command surface accepts"""
from enum import Enum
from typing import Optional, Tuple, Union

from limweight.core.exceptions import ParseError
from limweight.limits import Algebra, IdealLabel, LimitModuleDescriptor, parse_ideal, parse_module
from limweight.rootdata import BorelDescriptor, parse_borel
from limweight.weights import Partition, SetDescriptor, Weight, WeightSeq, parse_seq, parse_set
from limweight.weights.sets import NAMED

Descriptor = Union[SetDescriptor, WeightSeq, BorelDescriptor, IdealLabel, LimitModuleDescriptor, Weight, Partition]


class DescriptorKind(str, Enum):
    SET = "set"
    SEQ = "seq"
    BOREL = "borel"
    IDEAL = "ideal"
    MODULE = "module"
    WEIGHT = "weight"
    PARTITION = "partition"


def guess_kind(text: str) -> DescriptorKind:
    body = text.strip()
    if body in ("Isw", "0") or body.startswith(("I(", "OSpin(", "AnnV(", "Aug(")):
        return DescriptorKind.IDEAL
    if body.startswith("blocks=") or (body.startswith("[") and body[1:].lstrip().startswith(("asc", "desc", "seq", "dense"))):
        return DescriptorKind.BOREL
    if body.startswith("{") or body in NAMED:
        return DescriptorKind.SET
    if body.startswith("[") and "tail=" in body:
        return DescriptorKind.SEQ
    if body.startswith(("[", "(")) or body[:1].isdigit() or body[:1] in "-g":
        return DescriptorKind.WEIGHT
    return DescriptorKind.MODULE


def parse_descriptor(
    text: str,
    kind: Optional[DescriptorKind] = None,
    algebra: Algebra = Algebra.SL,
) -> Tuple[DescriptorKind, Descriptor]:
    """Parse ``text`` as ``kind`` (guessed when omitted); errors carry the position"""
    kind = guess_kind(text) if kind is None else DescriptorKind(kind)
    if kind is DescriptorKind.SET:
        return kind, parse_set(text)
    if kind is DescriptorKind.SEQ:
        return kind, parse_seq(text)
    if kind is DescriptorKind.BOREL:
        return kind, parse_borel(text)
    if kind is DescriptorKind.IDEAL:
        return kind, parse_ideal(text)
    if kind is DescriptorKind.MODULE:
        return kind, parse_module(text, algebra)
    if kind is DescriptorKind.PARTITION:
        return kind, Partition.parse(text)
    try:
        return kind, Weight.parse(text)
    except ValueError as e:
        raise ParseError(str(e), 0, text)


def parse_weight_like(text: str) -> Union[Weight, WeightSeq]:
    """A sequence when the text has a tail, otherwise a finite weight"""
    if "tail=" in text:
        return parse_seq(text)
    return Weight.parse(text)


def int_weight(text: str) -> Tuple[int, ...]:
    """Comma separated integers, with or without brackets"""
    weight = Weight.parse(text)
    if not all(x.is_integer for x in weight):
        raise ParseError(f"expected integers: {text!r}", 0, text)
    return weight.as_ints()
