"""
Splitting Borel subalgebras as block-structured orders.

An order on the index set is a list of blocks; every index of an earlier block
precedes every index of a later one. Inside a block the order is an explicit
list (``seq``), increasing (``asc``), decreasing (``desc``, larger index
first) or opaque (``dense``, only set-level questions are answerable).
The optional sign set is the +1 locus of sigma.
"""
from dataclasses import dataclass
from enum import Enum
from functools import cmp_to_key
from typing import Optional, Tuple, Union

from loguru import logger

from limweight.core.exceptions import InvalidBorel, ParseError, UndecidableDescriptor
from limweight.weights import SetDescriptor, parse_set

from .lie_type import Family, LieType
from .roots import Root


class BlockKind(str, Enum):
    SEQ = "seq"
    ASC = "asc"
    DESC = "desc"
    DENSE = "dense"


@dataclass(frozen=True)
class Block:
    kind: BlockKind
    carrier: Union[SetDescriptor, Tuple[int, ...]]

    def __post_init__(self):
        object.__setattr__(self, "kind", BlockKind(self.kind))
        if self.kind is BlockKind.SEQ:
            items = tuple(int(i) for i in self.carrier)
            if len(set(items)) != len(items) or any(i < 1 for i in items):
                raise InvalidBorel(f"explicit block lists distinct positive indices: {items}")
            object.__setattr__(self, "carrier", items)
        elif not isinstance(self.carrier, SetDescriptor):
            raise InvalidBorel("ordered blocks take a set carrier")

    @property
    def members(self) -> SetDescriptor:
        if self.kind is BlockKind.SEQ:
            return SetDescriptor.finite(self.carrier)
        return self.carrier

    def __contains__(self, i: int) -> bool:
        return i in self.carrier

    def position_less(self, i: int, j: int) -> bool:
        if self.kind is BlockKind.SEQ:
            return self.carrier.index(i) < self.carrier.index(j)
        if self.kind is BlockKind.ASC:
            return i < j
        if self.kind is BlockKind.DESC:
            return i > j
        raise UndecidableDescriptor("elements of a dense block are not comparable here")

    def ordered(self, subset: SetDescriptor) -> Tuple[int, ...]:
        """Elements of a finite subset of the carrier in block order"""
        items = subset.elements()
        if self.kind is BlockKind.SEQ:
            return tuple(i for i in self.carrier if i in subset)
        if self.kind is BlockKind.ASC:
            return tuple(sorted(items))
        if self.kind is BlockKind.DESC:
            return tuple(sorted(items, reverse=True))
        if len(items) > 1:
            raise UndecidableDescriptor("elements of a dense block are not comparable here")
        return tuple(items)

    def first(self, k: int) -> Tuple[int, ...]:
        """Up to k least elements; stops early where no least element exists"""
        if self.kind is BlockKind.SEQ:
            return self.carrier[:k]
        carrier = self.carrier
        if self.kind is BlockKind.ASC:
            return carrier.first_elements(k)
        if self.kind is BlockKind.DESC and carrier.is_finite:
            return tuple(sorted(carrier.elements(), reverse=True))[:k]
        if self.kind is BlockKind.DENSE and carrier.is_finite and carrier.cardinality() == 1:
            return carrier.elements()
        return ()

    def last(self, k: int) -> Tuple[int, ...]:
        """Up to k greatest elements, greatest first"""
        if self.kind is BlockKind.SEQ:
            return tuple(reversed(self.carrier))[:k]
        carrier = self.carrier
        if self.kind is BlockKind.DESC:
            return carrier.first_elements(k)
        if self.kind is BlockKind.ASC and carrier.is_finite:
            return tuple(sorted(carrier.elements(), reverse=True))[:k]
        if self.kind is BlockKind.DENSE and carrier.is_finite and carrier.cardinality() == 1:
            return carrier.elements()
        return ()

    def __str__(self) -> str:
        if self.kind is BlockKind.SEQ:
            return "seq(" + ",".join(str(i) for i in self.carrier) + ")"
        return f"{self.kind.value}{self.carrier}"


@dataclass(frozen=True)
class BorelDescriptor:
    blocks: Tuple[Block, ...]
    sign: Optional[SetDescriptor] = None

    def __post_init__(self):
        blocks = tuple(self.blocks)
        if not blocks:
            raise InvalidBorel("an order needs at least one block")
        union = SetDescriptor.empty()
        for block in blocks:
            if not (union & block.members).is_empty:
                raise InvalidBorel(f"block {block} overlaps an earlier block")
            union = union | block.members
        if not _covers(union):
            raise InvalidBorel("blocks must cover all indices or an initial segment 1..N")
        object.__setattr__(self, "blocks", blocks)

    # Constructors

    @classmethod
    def natural(cls, sign: Optional[SetDescriptor] = None, size: Optional[int] = None) -> "BorelDescriptor":
        if size is not None:
            return cls.from_permutation(range(1, size + 1), sign)
        return cls((Block(BlockKind.ASC, SetDescriptor.everything()),), sign)

    @classmethod
    def reversed_natural(cls, sign: Optional[SetDescriptor] = None, size: Optional[int] = None) -> "BorelDescriptor":
        if size is not None:
            return cls.from_permutation(range(size, 0, -1), sign)
        return cls((Block(BlockKind.DESC, SetDescriptor.everything()),), sign)

    @classmethod
    def from_permutation(cls, order, sign: Optional[SetDescriptor] = None) -> "BorelDescriptor":
        """Finite order listing 1..N from least to greatest"""
        return cls((Block(BlockKind.SEQ, tuple(order)),), sign)

    @classmethod
    def fixed_sp(cls, n: Optional[int] = None) -> "BorelDescriptor":
        """Positive roots e_i - e_j (i < j) and -e_k - e_l (k <= l)"""
        return cls.reversed_natural(SetDescriptor.empty(), n)

    @classmethod
    def parse(cls, text: str) -> "BorelDescriptor":
        return parse_borel(text)

    # Order queries

    @property
    def is_finite(self) -> bool:
        return all(b.members.is_finite for b in self.blocks)

    @property
    def size(self) -> Optional[int]:
        if not self.is_finite:
            return None
        return sum(b.members.cardinality() for b in self.blocks)

    def block_index(self, i: int) -> int:
        for index, block in enumerate(self.blocks):
            if i in block:
                return index
        raise InvalidBorel(f"index {i} is not ordered by {self}")

    def precedes(self, i: int, j: int) -> bool:
        if i == j:
            return False
        bi, bj = self.block_index(i), self.block_index(j)
        if bi != bj:
            return bi < bj
        return self.blocks[bi].position_less(i, j)

    def order_window(self, n: int) -> Tuple[int, ...]:
        """The indices 1..n listed from least to greatest"""

        def compare(i: int, j: int) -> int:
            return -1 if self.precedes(i, j) else 1

        return tuple(sorted(range(1, n + 1), key=cmp_to_key(compare)))

    def sign_of(self, i: int) -> int:
        if self.sign is None:
            raise InvalidBorel("a type A order carries no signs")
        return 1 if i in self.sign else -1

    @staticmethod
    def _walk(blocks, k: int, take) -> Tuple[int, ...]:
        found = []
        for block in blocks:
            need = k - len(found)
            if need == 0:
                break
            got = take(block, need)
            found.extend(got)
            exhausted = block.members.is_finite and len(got) == block.members.cardinality()
            if len(got) < need and not exhausted:
                break
        return tuple(found)

    def first_elements(self, k: int) -> Tuple[int, ...]:
        """The k least indices, or fewer when the order has no further least element"""
        return self._walk(self.blocks, k, Block.first)

    def last_elements(self, k: int) -> Tuple[int, ...]:
        """The k greatest indices, greatest first"""
        return self._walk(reversed(self.blocks), k, Block.last)

    def minimal_element(self) -> Optional[int]:
        first = self.first_elements(1)
        return first[0] if first else None

    def maximal_element(self) -> Optional[int]:
        last = self.last_elements(1)
        return last[0] if last else None

    def is_compatible(self, subset: SetDescriptor) -> bool:
        """True iff every element of ``subset`` precedes every element outside it"""
        cut = False
        for block in self.blocks:
            inside = block.members & subset
            outside = block.members - subset
            if cut:
                if not inside.is_empty:
                    return False
                continue
            if outside.is_empty:
                continue
            cut = True
            if inside.is_empty:
                continue
            if not self._initial_segment(block, inside, outside):
                return False
        return True

    @staticmethod
    def _initial_segment(block: Block, inside: SetDescriptor, outside: SetDescriptor) -> bool:
        if block.kind is BlockKind.SEQ:
            positions = [block.carrier.index(i) for i in inside.elements()]
            return max(positions) < min(block.carrier.index(i) for i in outside.elements())
        if block.kind is BlockKind.ASC:
            return inside.is_finite and max(inside.elements()) < outside.min_element()
        if block.kind is BlockKind.DESC:
            return outside.is_finite and inside.min_element() > max(outside.elements())
        raise UndecidableDescriptor("a proper cut of a dense block is not decidable")

    def boundary(self, subset: SetDescriptor) -> Tuple[Optional[int], Optional[int]]:
        """(greatest element of a compatible subset, least element after it); None where none exists"""
        if not self.is_compatible(subset):
            raise InvalidBorel(f"{subset} is not an initial segment of {self}")
        previous = None
        for block in self.blocks:
            inside = block.members & subset
            outside = block.members - subset
            if outside.is_empty:
                previous = block
                continue
            if not inside.is_empty:
                return self._edges_within(block, inside, outside)
            last = previous.last(1) if previous is not None else ()
            first = block.first(1)
            return (last[0] if last else None), (first[0] if first else None)
        last = previous.last(1) if previous is not None else ()
        return (last[0] if last else None), None

    @staticmethod
    def _edges_within(block: Block, inside: SetDescriptor, outside: SetDescriptor) -> Tuple[int, int]:
        if block.kind is BlockKind.SEQ:
            inner = [i for i in block.carrier if i in inside]
            outer = [i for i in block.carrier if i in outside]
            return inner[-1], outer[0]
        if block.kind is BlockKind.ASC:
            return max(inside.elements()), outside.min_element()
        return inside.min_element(), max(outside.elements())

    def restricted(self, n: int) -> "BorelDescriptor":
        """The induced finite order on 1..n"""
        sign = None if self.sign is None else SetDescriptor.finite(i for i in range(1, n + 1) if i in self.sign)
        return BorelDescriptor.from_permutation(self.order_window(n), sign)

    # Positive roots

    def positive_roots(self, lie_type: LieType, window: Optional[int] = None) -> frozenset:
        count = window if lie_type.is_infinite else lie_type.index_count
        if count is None:
            raise ValueError("an infinite type needs an index window")
        family = lie_type.family
        if family is not Family.A and self.sign is None:
            raise InvalidBorel(f"type {family.value} needs a sign map")
        if family is Family.D:
            top = self.maximal_element()
            if top is not None and self.sign_of(top) != 1:
                raise InvalidBorel(f"type D requires sigma({top}) = 1 at the maximal element")
        order = self.order_window(count)
        found = set()
        for a, i in enumerate(order):
            for j in order[a + 1:]:
                if family is Family.A:
                    found.add(Root.e_diff(i, j))
                else:
                    found.add(Root.signed_pair(i, self.sign_of(i), j, -self.sign_of(j)))
        if family is not Family.A:
            for a, i in enumerate(order):
                for j in order[a:]:
                    if i == j and family is not Family.C:
                        continue
                    found.add(Root.signed_pair(i, self.sign_of(i), j, self.sign_of(j)))
            if family is Family.B:
                found.update(Root.e(i, self.sign_of(i)) for i in order)
        logger.debug("{} positive roots of {} on {} indices", len(found), lie_type, count)
        return frozenset(found)

    def __str__(self) -> str:
        text = "blocks=[" + "; ".join(str(b) for b in self.blocks) + "]"
        if self.sign is not None:
            text += f" sign=+{self.sign}"
        return text


def _covers(union: SetDescriptor) -> bool:
    """All indices, or exactly 1..N"""
    if union.is_cofinite:
        return union.complement().is_empty
    return union.is_finite and union.elements() == tuple(range(1, union.cardinality() + 1))


def _residue_class(listed: Tuple[int, ...]) -> Optional[SetDescriptor]:
    """The residue class a listed progression such as 6,4,2 starts, or None"""
    if len(listed) < 2:
        return None
    items = sorted(listed)
    step = items[1] - items[0]
    if any(b - a != step for a, b in zip(items, items[1:])):
        return None
    return SetDescriptor.arithmetic((items[0] - 1) % step + 1, step)


def _complete_trailing(blocks: list) -> list:
    """
    Extend a finite trailing asc/desc block to its whole residue class.

    ``[asc{odds}; desc{6,4,2}]`` lists the first members of the descending
    block over the evens; the indices nobody covers must be exactly the rest
    of that class, otherwise the list is returned unchanged.
    """
    last = blocks[-1]
    if last.kind not in (BlockKind.ASC, BlockKind.DESC) or not last.members.is_finite:
        return blocks
    union = SetDescriptor.empty()
    for block in blocks:
        union = union | block.members
    if _covers(union):
        return blocks
    whole = _residue_class(last.members.elements())
    if whole is None or whole - last.members != union.complement():
        return blocks
    return blocks[:-1] + [Block(last.kind, whole)]


def _split_top(text: str, separator: str = ";"):
    parts, depth, current = [], 0, ""
    for ch in text:
        if ch in "{(":
            depth += 1
        elif ch in "})":
            depth -= 1
        if ch == separator and depth == 0:
            parts.append(current)
            current = ""
        else:
            current += ch
    parts.append(current)
    return parts


def _parse_block(text: str, source: str, position: int) -> Block:
    body = text.strip()
    for kind in BlockKind:
        if body.startswith(kind.value):
            rest = body[len(kind.value):].strip()
            if kind is BlockKind.SEQ:
                if not (rest.startswith("(") and rest.endswith(")")):
                    raise ParseError("seq blocks are written seq(3,1,2)", position, source)
                try:
                    items = tuple(int(x) for x in rest[1:-1].split(",") if x.strip())
                except ValueError:
                    raise ParseError("seq blocks list integers", position, source)
                return Block(kind, items)
            try:
                return Block(kind, parse_set(rest))
            except ParseError as e:
                raise ParseError(str(e), position, source)
    raise ParseError(f"unknown block {body!r}", position, source)


def parse_borel(text: str) -> BorelDescriptor:
    """Parse ``blocks=[asc{1,3,5,...}; desc{6,4,2}] sign=+{2,4,6,...}``"""
    body = text.strip()
    if body.startswith("blocks="):
        body = body[len("blocks="):].lstrip()
    if not body.startswith("["):
        raise ParseError("block list must start with '['", 0, text)
    depth, close = 0, -1
    for index, ch in enumerate(body):
        depth += ch in "[{("
        depth -= ch in "]})"
        if depth == 0:
            close = index
            break
    if close < 0:
        raise ParseError("unterminated block list", len(text), text)
    blocks = []
    position = text.find("[") + 1
    for chunk in _split_top(body[1:close]):
        blocks.append(_parse_block(chunk, text, position))
        position += len(chunk) + 1
    rest = body[close + 1:].strip()
    sign = None
    if rest:
        if not rest.startswith("sign="):
            raise ParseError(f"unexpected {rest!r}", text.find(rest), text)
        sign_text = rest[len("sign="):].strip()
        if sign_text[:1] not in "+-":
            raise ParseError("sign set starts with + or -", text.find(rest), text)
        locus = parse_set(sign_text[1:])
        sign = locus if sign_text[0] == "+" else locus.complement()
    try:
        return BorelDescriptor(tuple(_complete_trailing(blocks)), sign)
    except InvalidBorel as e:
        raise ParseError(str(e), 0, text)


def positive_roots(borel: BorelDescriptor, lie_type: LieType, window: Optional[int] = None) -> frozenset:
    return borel.positive_roots(lie_type, window)
