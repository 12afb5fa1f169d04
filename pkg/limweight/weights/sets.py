"""
Finitely described subsets of the positive integers.

A set is stored in canonical form: a minimal period, a minimal ``start`` from
which membership is purely periodic, and the finitely many members below
``start``. Two descriptors are equal exactly when they describe the same set.
"""
import re
from dataclasses import dataclass
from math import lcm
from typing import Callable, FrozenSet, Iterable, Iterator, Optional, Tuple

from limweight.core.exceptions import ParseError, UndecidableDescriptor


def _divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


def _canonical(member: Callable[[int], bool], start: int, period: int):
    """Canonical (members_below, period, pattern, start) of a set that is purely
    periodic from ``start`` on"""
    pattern = tuple(member(start + r) for r in range(period))
    for p in _divisors(period):
        if all(pattern[r] == pattern[r % p] for r in range(period)):
            period, pattern = p, pattern[:p]
            break
    while start > 1 and member(start - 1) == pattern[-1]:
        start -= 1
        pattern = (pattern[-1],) + pattern[:-1]
    below = frozenset(i for i in range(1, start) if member(i))
    return below, period, pattern, start


@dataclass(frozen=True)
class SetDescriptor:
    exceptions_in: FrozenSet[int] = frozenset()
    exceptions_out: FrozenSet[int] = frozenset()
    period: int = 1
    pattern: Tuple[bool, ...] = (False,)
    start: int = 1

    def __post_init__(self):
        if self.period < 1 or len(self.pattern) != self.period:
            raise ValueError("pattern length must equal a positive period")
        if self.start < 1:
            raise ValueError("start must be positive")
        ex_in, ex_out = frozenset(self.exceptions_in), frozenset(self.exceptions_out)
        if ex_in & ex_out:
            raise ValueError("exception sets overlap")
        if any(i < 1 for i in ex_in | ex_out):
            raise ValueError("indices are positive integers")
        raw_pattern = tuple(bool(b) for b in self.pattern)

        def member(i: int) -> bool:
            if i in ex_in:
                return True
            if i in ex_out:
                return False
            if i < self.start:
                return False
            return raw_pattern[(i - self.start) % self.period]

        top = max(ex_in | ex_out | {self.start - 1}) + 1
        below, period, pattern, start = _canonical(member, top, self.period)
        object.__setattr__(self, "exceptions_in", below)
        object.__setattr__(self, "exceptions_out", frozenset())
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "pattern", pattern)
        object.__setattr__(self, "start", start)

    # Constructors

    @classmethod
    def eventually_periodic(cls, member: Callable[[int], bool], start: int, period: int) -> "SetDescriptor":
        """Set whose membership ``member(i)`` is periodic with ``period`` for i >= start"""
        start = max(start, 1)
        pattern = tuple(member(start + r) for r in range(period))
        below = frozenset(i for i in range(1, start) if member(i))
        return cls(below, frozenset(), period, pattern, start)

    @classmethod
    def finite(cls, members: Iterable[int]) -> "SetDescriptor":
        return cls(exceptions_in=frozenset(members))

    @classmethod
    def cofinite(cls, excluded: Iterable[int] = ()) -> "SetDescriptor":
        return cls(exceptions_out=frozenset(excluded), pattern=(True,))

    @classmethod
    def arithmetic(cls, first: int, step: int) -> "SetDescriptor":
        pattern = tuple(r == 0 for r in range(step))
        return cls(period=step, pattern=pattern, start=first)

    @classmethod
    def empty(cls) -> "SetDescriptor":
        return cls()

    @classmethod
    def everything(cls) -> "SetDescriptor":
        return cls.cofinite()

    @classmethod
    def odds(cls) -> "SetDescriptor":
        return cls.arithmetic(1, 2)

    @classmethod
    def evens(cls) -> "SetDescriptor":
        return cls.arithmetic(2, 2)

    # Membership

    def __contains__(self, i: int) -> bool:
        if i < self.start:
            return i in self.exceptions_in
        return self.pattern[(i - self.start) % self.period]

    def contains(self, i: int) -> bool:
        return i in self

    def __iter__(self) -> Iterator[int]:
        if not self.is_finite:
            raise UndecidableDescriptor("cannot iterate an infinite set")
        return iter(self.elements())

    def members_up_to(self, n: int) -> Tuple[int, ...]:
        return tuple(i for i in range(1, n + 1) if i in self)

    def first_elements(self, k: int) -> Tuple[int, ...]:
        found = []
        i = 1
        bound = self.start + self.period
        while len(found) < k and (i < bound or any(self.pattern)):
            if i in self:
                found.append(i)
            i += 1
        return tuple(found)

    def elements(self) -> Tuple[int, ...]:
        if not self.is_finite:
            raise UndecidableDescriptor("an infinite set has no element list")
        return tuple(sorted(self.exceptions_in))

    def cardinality(self) -> int:
        return len(self.elements())

    def min_element(self) -> Optional[int]:
        first = self.first_elements(1)
        return first[0] if first else None

    def max_element(self) -> Optional[int]:
        if not self.is_finite or self.is_empty:
            return None
        return max(self.exceptions_in)

    # Shape

    @property
    def is_empty(self) -> bool:
        return self.is_finite and not self.exceptions_in

    @property
    def is_finite(self) -> bool:
        return not any(self.pattern)

    @property
    def is_cofinite(self) -> bool:
        return all(self.pattern)

    @property
    def is_semi_infinite(self) -> bool:
        return not self.is_finite and not self.is_cofinite

    # Boolean algebra

    def _combine(self, other: "SetDescriptor", op: Callable[[bool, bool], bool]) -> "SetDescriptor":
        start = max(self.start, other.start)
        period = lcm(self.period, other.period)
        return SetDescriptor.eventually_periodic(lambda i: op(i in self, i in other), start, period)

    def complement(self) -> "SetDescriptor":
        return SetDescriptor.eventually_periodic(lambda i: i not in self, self.start, self.period)

    def union(self, other: "SetDescriptor") -> "SetDescriptor":
        return self._combine(other, lambda a, b: a or b)

    def intersection(self, other: "SetDescriptor") -> "SetDescriptor":
        return self._combine(other, lambda a, b: a and b)

    def difference(self, other: "SetDescriptor") -> "SetDescriptor":
        return self._combine(other, lambda a, b: a and not b)

    def symmetric_difference(self, other: "SetDescriptor") -> "SetDescriptor":
        return self._combine(other, lambda a, b: a != b)

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __xor__ = symmetric_difference

    def is_subset(self, other: "SetDescriptor") -> bool:
        return (self - other).is_empty

    def equals(self, other: "SetDescriptor") -> bool:
        return self == other

    def differs_finitely(self, other: "SetDescriptor") -> bool:
        return (self ^ other).is_finite

    # Text form

    def __str__(self) -> str:
        """Canonical text of the set; the text it was parsed from is not kept"""
        members = ",".join(str(i) for i in sorted(self.exceptions_in))
        if self.is_finite:
            return "{" + members + "}"
        bits = "".join("1" if b else "0" for b in self.pattern)
        options = f"period={self.period}, pattern={bits}, start={self.start}"
        return "{" + (members + "; " if members else "") + options + "}"

    def __repr__(self) -> str:
        return f"SetDescriptor{self}"

    @classmethod
    def parse(cls, text: str) -> "SetDescriptor":
        return parse_set(text)


NAMED = {
    "odds": SetDescriptor.odds,
    "evens": SetDescriptor.evens,
    "all": SetDescriptor.everything,
    "none": SetDescriptor.empty,
}

_OPTION = re.compile(r"\s*(period|pattern|start|out)\s*=\s*([^,]*)\s*")


def _parse_int(token: str, text: str, position: int) -> int:
    try:
        value = int(token.strip())
    except ValueError:
        raise ParseError(f"expected an index, got {token.strip()!r}", position, text)
    if value < 1:
        raise ParseError("indices are positive integers", position, text)
    return value


def parse_set(text: str) -> SetDescriptor:
    """Parse ``{1,3; period=2, pattern=10, start=5}``, ``{1,3,5,...}`` or a named set"""
    stripped = text.strip()
    if stripped in NAMED:
        return NAMED[stripped]()
    if not (stripped.startswith("{") and stripped.endswith("}")):
        raise ParseError("a set is written in braces", 0, text)
    body = stripped[1:-1]
    if body.strip() in NAMED:
        return NAMED[body.strip()]()
    head, _, tail = body.partition(";")
    if "=" in head and not tail:
        head, tail = "", head
    items = [item.strip() for item in head.split(",") if item.strip()]
    progression = bool(items) and items[-1] == "..."
    if progression:
        items = items[:-1]
    members = [_parse_int(item, text, 1 + head.find(item)) for item in items]

    if progression:
        if not members:
            raise ParseError("'...' needs at least one element", 1, text)
        step = members[-1] - members[-2] if len(members) > 1 else 1
        if step < 1:
            raise ParseError("a progression must increase", 1 + len(head), text)
        first = members[-2] if len(members) > 1 else members[-1]
        progression_set = SetDescriptor.arithmetic(first, step)
        return progression_set | SetDescriptor.finite(members)

    options = {}
    base = 2 + len(head)
    for chunk in tail.split(",") if tail.strip() else []:
        m = _OPTION.fullmatch(chunk)
        if not m:
            raise ParseError(f"bad set option {chunk.strip()!r}", base, text)
        options[m.group(1)] = m.group(2).strip()
        base += len(chunk) + 1
    if not options:
        return SetDescriptor.finite(members)
    try:
        period = int(options.get("period", "1"))
        bits = options.get("pattern", "0" * period)
        start = int(options.get("start", "1"))
    except ValueError:
        raise ParseError("period and start are integers", 2 + len(head), text)
    if len(bits) != period or set(bits) - {"0", "1"}:
        raise ParseError("pattern must be a bit string of length period", 2 + len(head), text)
    out = frozenset(
        _parse_int(token, text, 2 + len(head)) for token in options.get("out", "").split("|") if token.strip()
    )
    members_set = frozenset(members)
    if members_set & out:
        raise ParseError("an index cannot be both in and out", 2 + len(head), text)
    return SetDescriptor(members_set, out, period, tuple(b == "1" for b in bits), start)
