from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from limweight.core.exceptions import ParseError

from .scalar import ExtScalar, ScalarLike, ZERO


@dataclass(frozen=True)
class Weight:
    """Finite-rank weight vector with exact entries, indexed from 1 in the API"""

    entries: Tuple[ExtScalar, ...]

    def __post_init__(self):
        entries = tuple(ExtScalar.coerce(x) for x in self.entries)
        if not entries:
            raise ValueError("a weight has positive rank")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, *values: ScalarLike) -> "Weight":
        return cls(tuple(values))

    @classmethod
    def from_values(cls, values: Iterable[ScalarLike]) -> "Weight":
        return cls(tuple(values))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((ZERO,) * rank)

    @classmethod
    def constant(cls, rank: int, value: ScalarLike) -> "Weight":
        return cls((ExtScalar.coerce(value),) * rank)

    @classmethod
    def unit(cls, rank: int, i: int, value: ScalarLike = 1) -> "Weight":
        return cls.zero(rank).with_entry(i, value)

    @classmethod
    def parse(cls, text: str) -> "Weight":
        body = text.strip()
        if body[:1] in "([" and body[-1:] in ")]":
            body = body[1:-1]
        if not body.strip():
            raise ParseError("empty weight", 0, text)
        items = body.split(",")
        values = []
        offset = 0
        for item in items:
            try:
                values.append(ExtScalar.parse(item))
            except ParseError:
                raise ParseError(f"bad weight entry {item.strip()!r}", offset, text)
            offset += len(item) + 1
        return cls(tuple(values))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def entry(self, i: int) -> ExtScalar:
        return self.entries[i - 1]

    def with_entry(self, i: int, value: ScalarLike) -> "Weight":
        entries = list(self.entries)
        entries[i - 1] = ExtScalar.coerce(value)
        return Weight(tuple(entries))

    def shifted(self, i: int, k) -> "Weight":
        return self.with_entry(i, self.entries[i - 1] + k)

    def _other(self, other) -> Sequence[ExtScalar]:
        values = other.entries if isinstance(other, Weight) else tuple(other)
        if len(values) != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} and {len(values)}")
        return values

    def __add__(self, other) -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.entries, self._other(other))))

    def __sub__(self, other) -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.entries, self._other(other))))

    def scaled(self, k) -> "Weight":
        return Weight(tuple(a.scale(k) for a in self.entries))

    def head(self, n: int) -> "Weight":
        return Weight(self.entries[:n])

    def concat(self, other: "Weight") -> "Weight":
        return Weight(self.entries + other.entries)

    @property
    def is_integral(self) -> bool:
        return all(x.is_integer for x in self.entries)

    @property
    def is_dominant_integral(self) -> bool:
        return self.is_integral and all(
            a.value >= b.value for a, b in zip(self.entries, self.entries[1:])
        )

    def as_ints(self) -> Tuple[int, ...]:
        return tuple(x.as_int() for x in self.entries)

    def sort_key(self):
        return tuple(x.sort_key() for x in self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.entries) + ")"

    def __repr__(self) -> str:
        return f"Weight{self}"


