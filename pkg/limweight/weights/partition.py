import re
from dataclasses import dataclass
from typing import Iterable, Tuple

from limweight.core.exceptions import ParseError


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError("partition parts are positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("partition parts are weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "Partition":
        """Sorted nonzero values; zeros are dropped"""
        return cls(tuple(sorted((v for v in values if v), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        body = text.strip()
        if body[:1] in "([" and body[-1:] in ")]":
            body = body[1:-1]
        if not body.strip():
            return cls()
        if not re.fullmatch(r"\s*\d+(\s*,\s*\d+)*\s*", body):
            raise ParseError(f"not a partition: {text!r}", 0, text)
        try:
            return cls(tuple(int(p) for p in body.split(",")))
        except ValueError as e:
            raise ParseError(str(e), 0, text)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def is_empty(self) -> bool:
        return not self.parts

    def dominates(self, other: "Partition") -> bool:
        """Dominance order: every partial sum of self is at least that of other"""
        if self.size != other.size:
            return False
        mine = theirs = 0
        for i in range(max(self.length, other.length)):
            mine += self.parts[i] if i < self.length else 0
            theirs += other.parts[i] if i < other.length else 0
            if mine < theirs:
                return False
        return True

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"
