"""
Infinite weight sequences with quasi-periodic tails.

A ``WeightSeq`` has a finite ``prefix`` followed by a tail of period P: the
entry at index ``L + q*P + r + 1`` (L the prefix length, 0 <= r < P) is
``tail[r] + q*step``. Constant tails are the case P = 1, step = 0.
"""
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable, Iterable, Tuple

import sympy

from limweight.core.exceptions import ParseError, UndecidableDescriptor

from .scalar import ExtScalar, ScalarLike, ZERO
from .sets import SetDescriptor
from .weight import Weight


@dataclass(frozen=True)
class WeightSeq:
    prefix: Tuple[ExtScalar, ...] = ()
    tail: Tuple[ExtScalar, ...] = (ZERO,)
    step: int = 0

    def __post_init__(self):
        prefix = tuple(ExtScalar.coerce(x) for x in self.prefix)
        tail = self.tail
        if isinstance(tail, (ExtScalar, int, Fraction, str)):
            tail = (tail,)
        tail = tuple(ExtScalar.coerce(x) for x in tail)
        if not tail:
            raise ValueError("tail needs at least one value")
        if int(self.step) != self.step:
            raise ValueError("tail step must be an integer")
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "step", int(self.step))

    # Construction

    @classmethod
    def of(cls, prefix: Iterable[ScalarLike], tail: ScalarLike = 0, step: int = 0) -> "WeightSeq":
        return cls(tuple(prefix), tail, step)

    @classmethod
    def constant(cls, value: ScalarLike) -> "WeightSeq":
        return cls((), (ExtScalar.coerce(value),))

    @classmethod
    def indicator(cls, locus: SetDescriptor, inside: ScalarLike = 1, outside: ScalarLike = 0) -> "WeightSeq":
        """The sequence equal to ``inside`` on ``locus`` and ``outside`` elsewhere"""
        inside, outside = ExtScalar.coerce(inside), ExtScalar.coerce(outside)
        length = locus.start - 1
        prefix = tuple(inside if i in locus else outside for i in range(1, length + 1))
        tail = tuple(inside if p else outside for p in locus.pattern)
        return cls(prefix, tail)

    @classmethod
    def parse(cls, text: str) -> "WeightSeq":
        return parse_seq(text)

    # Access

    @property
    def period(self) -> int:
        return len(self.tail)

    def entry(self, i: int) -> ExtScalar:
        if i < 1:
            raise IndexError("sequence indices start at 1")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        q, r = divmod(i - len(self.prefix) - 1, self.period)
        return self.tail[r] + q * self.step if self.step else self.tail[r]

    def truncate(self, n: int) -> Weight:
        return Weight(tuple(self.entry(i) for i in range(1, n + 1)))

    def window(self, n: int) -> Tuple[ExtScalar, ...]:
        return tuple(self.entry(i) for i in range(1, n + 1))

    def normalized(self, length: int, period: int) -> "WeightSeq":
        """Same sequence re-expressed with the given prefix length and period"""
        if length < len(self.prefix) or period % self.period:
            raise ValueError("can only lengthen the prefix and multiply the period")
        prefix = tuple(self.entry(i) for i in range(1, length + 1))
        tail = tuple(self.entry(length + 1 + r) for r in range(period))
        return WeightSeq(prefix, tail, self.step * (period // self.period))

    def with_entry(self, i: int, value: ScalarLike) -> "WeightSeq":
        seq = self.normalized(max(i, len(self.prefix)), self.period)
        prefix = list(seq.prefix)
        prefix[i - 1] = ExtScalar.coerce(value)
        return WeightSeq(tuple(prefix), seq.tail, seq.step)

    # Arithmetic

    def _combine(self, other: "WeightSeq", op: Callable) -> "WeightSeq":
        length, period = horizon(self, other)
        a, b = self.normalized(length, period), other.normalized(length, period)
        return WeightSeq(
            tuple(op(x, y) for x, y in zip(a.prefix, b.prefix)),
            tuple(op(x, y) for x, y in zip(a.tail, b.tail)),
            op(a.step, b.step),
        )

    def __add__(self, other: "WeightSeq") -> "WeightSeq":
        return self._combine(other, lambda x, y: x + y)

    def __sub__(self, other: "WeightSeq") -> "WeightSeq":
        return self._combine(other, lambda x, y: x - y)

    def shifted_by(self, value: ScalarLike) -> "WeightSeq":
        return self + WeightSeq.constant(value)

    def partial_sums(self) -> "WeightSeq":
        """a_n = x_1 + ... + x_n; needs a purely periodic tail"""
        if self.step:
            raise UndecidableDescriptor("partial sums of a drifting tail are not quasi-periodic")
        total = ZERO
        prefix = []
        for x in self.prefix:
            total = total + x
            prefix.append(total)
        tail = []
        for x in self.tail:
            total = total + x
            tail.append(total)
        per_period = sum(self.tail, ZERO)
        if not per_period.is_integer:
            raise UndecidableDescriptor("partial sums drift by a non-integer per period")
        return WeightSeq(tuple(prefix), tuple(tail), per_period.as_int())

    def differences(self) -> "WeightSeq":
        """d_1 = a_1 and d_i = a_i - a_{i-1}"""
        length = len(self.prefix) + 1
        prefix = [self.entry(1)] + [self.entry(i) - self.entry(i - 1) for i in range(2, length + 1)]
        tail = [self.entry(i) - self.entry(i - 1) for i in range(length + 1, length + 1 + self.period)]
        return WeightSeq(tuple(prefix), tuple(tail))

    # Shape

    @property
    def is_finitely_supported(self) -> bool:
        return self.step == 0 and all(x.is_zero for x in self.tail)

    def finite_sum(self) -> ExtScalar:
        if not self.is_finitely_supported:
            raise UndecidableDescriptor("sum of an infinitely supported sequence")
        return sum(self.prefix, ZERO)

    def same_as(self, other: "WeightSeq") -> bool:
        length, period = horizon(self, other)
        a, b = self.normalized(length, period), other.normalized(length, period)
        return a == b

    def stable_start(self) -> int:
        """An index from which the Int class of each residue no longer changes"""
        length = len(self.prefix)
        if not self.step:
            return length + 1
        switch = 0
        for x in self.tail:
            if not x.is_integer:
                continue
            v = x.value
            if self.step > 0 and v < 0:
                switch = max(switch, math.ceil(-v / self.step))
            elif self.step < 0 and v >= 0:
                switch = max(switch, math.floor(v / -self.step) + 1)
        return length + 1 + switch * self.period

    def classify_indices(self, predicate: Callable[[ExtScalar], bool]) -> SetDescriptor:
        """Index set where ``predicate`` holds; the predicate must only see the Int class"""
        return SetDescriptor.eventually_periodic(
            lambda i: predicate(self.entry(i)), self.stable_start(), self.period
        )

    def value_locus(self, value: ScalarLike) -> SetDescriptor:
        value = ExtScalar.coerce(value)
        start = len(self.prefix) + 1
        if self.step:
            solved = 0
            for x in self.tail:
                d = value.difference(x)
                if d is not None and d % self.step == 0 and d / self.step >= 0:
                    solved = max(solved, int(d / self.step) + 1)
            start += solved * self.period
        return SetDescriptor.eventually_periodic(lambda i: self.entry(i) == value, start, self.period)

    def distinct_values(self) -> frozenset:
        if self.step:
            raise UndecidableDescriptor("a drifting tail takes infinitely many values")
        return frozenset(self.prefix) | frozenset(self.tail)

    def to_exprs(self, n: int):
        return [self.entry(i).to_expr() for i in range(1, n + 1)]

    # Text form

    def __str__(self) -> str:
        prefix = ",".join(str(x) for x in self.prefix)
        tail = ",".join(str(x) for x in self.tail)
        text = f"[{prefix}; tail={tail}" if prefix else f"[tail={tail}"
        if self.step:
            text += f"; step={self.step}"
        return text + "]"

    def __repr__(self) -> str:
        return f"WeightSeq{self}"


def horizon(*seqs: WeightSeq) -> Tuple[int, int]:
    """(L, P) such that beyond index L every sequence is quasi-periodic with period P"""
    length = max(len(s.prefix) for s in seqs)
    period = lcm(*(s.period for s in seqs))
    return length, period


def constant_difference(a: WeightSeq, b: WeightSeq) -> bool:
    """True iff a_i - b_i is the same value for every i"""
    length, period = horizon(a, b)
    if a.step * (period // a.period) != b.step * (period // b.period):
        return False
    first = sympy.expand(a.entry(1).to_expr() - b.entry(1).to_expr())
    return all(
        sympy.expand(a.entry(i).to_expr() - b.entry(i).to_expr() - first) == 0
        for i in range(2, length + period + 1)
    )


_OPTION = re.compile(r"\s*(tail|step)\s*=(.*)", re.S)


def _scalars(text: str, source: str, position: int) -> Tuple[ExtScalar, ...]:
    values = []
    for item in text.split(","):
        if not item.strip():
            raise ParseError("empty sequence entry", position, source)
        try:
            values.append(ExtScalar.parse(item))
        except ParseError:
            raise ParseError(f"bad sequence entry {item.strip()!r}", position, source)
        position += len(item) + 1
    return tuple(values)


def parse_seq(text: str) -> WeightSeq:
    """Parse ``[1,2,g0; tail=-1]``, ``[tail=-1,0]`` or ``[1,2,g0; tail=-1; step=-1]``"""
    stripped = text.strip()
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise ParseError("a sequence is written in brackets", 0, text)
    parts = stripped[1:-1].split(";")
    prefix: Tuple[ExtScalar, ...] = ()
    tail = None
    step = 0
    position = 1
    for index, part in enumerate(parts):
        m = _OPTION.fullmatch(part)
        if m is None:
            if index != 0:
                raise ParseError(f"unexpected {part.strip()!r}", position, text)
            if part.strip():
                prefix = _scalars(part, text, position)
        elif m.group(1) == "tail":
            tail = _scalars(m.group(2), text, position)
        else:
            try:
                step = int(m.group(2).strip())
            except ValueError:
                raise ParseError("step is an integer", position, text)
        position += len(part) + 1
    if tail is None:
        raise ParseError("missing tail=", len(stripped) - 1, text)
    return WeightSeq(prefix, tail, step)
