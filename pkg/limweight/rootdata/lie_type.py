import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from limweight.core.exceptions import ParseError


class Family(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


@dataclass(frozen=True)
class LieType:
    """A(n), B(n), C(n), D(n), or the infinite-rank AInf, BInf, CInf, DInf when rank is None"""

    family: Family
    rank: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.rank is not None and self.rank < 1:
            raise ValueError("finite rank must be positive")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"\s*([ABCD])\s*(\d+|Inf|inf)\s*", text)
        if not m:
            raise ParseError(f"not a Lie type: {text!r}", 0, text)
        rank = None if m.group(2).lower() == "inf" else int(m.group(2))
        try:
            return cls(Family(m.group(1)), rank)
        except ValueError as e:
            raise ParseError(str(e), 0, text)

    @property
    def is_infinite(self) -> bool:
        return self.rank is None

    @property
    def index_count(self) -> int:
        """Number of coordinates e_i of the ambient Cartan"""
        if self.rank is None:
            raise ValueError(f"{self} has infinitely many coordinates")
        return self.rank + 1 if self.family is Family.A else self.rank

    def at_rank(self, n: int) -> "LieType":
        return LieType(self.family, n)

    def __str__(self) -> str:
        return f"{self.family.value}{'Inf' if self.rank is None else self.rank}"
