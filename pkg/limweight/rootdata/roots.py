import re
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Mapping, Optional, Tuple

from limweight.core.exceptions import ParseError
from limweight.weights import Weight

from .lie_type import Family, LieType


@dataclass(frozen=True)
class Root:
    """A root as a sparse integer combination of the e_i"""

    coeffs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        coeffs = tuple(sorted((int(i), int(c)) for i, c in self.coeffs if c))
        if Root._shape(dict(coeffs)) is None:
            raise ValueError(f"not a root: {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)

    @staticmethod
    def _shape(vector: Mapping[int, int]) -> Optional[str]:
        if any(i < 1 for i in vector):
            return None
        values = sorted(vector.values())
        if values == [-1, 1]:
            return "EiMinusEj"
        if values == [1, 1]:
            return "EiPlusEj"
        if values == [-1, -1]:
            return "MinusEiMinusEj"
        return {(1,): "Ei", (-1,): "MinusEi", (2,): "TwoEi", (-2,): "MinusTwoEi"}.get(tuple(values))

    # Constructors

    @classmethod
    def from_vector(cls, vector: Mapping[int, int]) -> Optional["Root"]:
        vector = {i: c for i, c in vector.items() if c}
        if cls._shape(vector) is None:
            return None
        return cls(tuple(vector.items()))

    @classmethod
    def e_diff(cls, i: int, j: int) -> "Root":
        return cls(((i, 1), (j, -1)))

    @classmethod
    def e_sum(cls, i: int, j: int) -> "Root":
        return cls(((i, 2),)) if i == j else cls(((i, 1), (j, 1)))

    @classmethod
    def neg_sum(cls, i: int, j: int) -> "Root":
        return cls(((i, -2),)) if i == j else cls(((i, -1), (j, -1)))

    @classmethod
    def e(cls, i: int, sign: int = 1) -> "Root":
        return cls(((i, sign),))

    @classmethod
    def two_e(cls, i: int, sign: int = 1) -> "Root":
        return cls(((i, 2 * sign),))

    @classmethod
    def signed_pair(cls, i: int, si: int, j: int, sj: int) -> "Root":
        """si*e_i + sj*e_j, with i == j giving 2*si*e_i"""
        if i == j:
            if si != sj:
                raise ValueError("e_i - e_i is not a root")
            return cls.two_e(i, si)
        return cls(((i, si), (j, sj)))

    @classmethod
    def parse(cls, text: str) -> "Root":
        terms = re.findall(r"([+-]?)\s*(\d*)\s*e(\d+)", text)
        rebuilt = "".join(f"{s}{c}e{i}" for s, c, i in terms)
        if not terms or rebuilt != re.sub(r"\s+", "", text):
            raise ParseError(f"not a root: {text!r}", 0, text)
        vector: Dict[int, int] = {}
        for sign, coeff, index in terms:
            value = int(coeff or 1) * (-1 if sign == "-" else 1)
            vector[int(index)] = vector.get(int(index), 0) + value
        root = cls.from_vector(vector)
        if root is None:
            raise ParseError(f"not a root: {text!r}", 0, text)
        return root

    # Structure

    @property
    def kind(self) -> str:
        return Root._shape(dict(self.coeffs))

    @property
    def vector(self) -> Dict[int, int]:
        return dict(self.coeffs)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.coeffs)

    def coefficient(self, i: int) -> int:
        return self.vector.get(i, 0)

    def __neg__(self) -> "Root":
        return Root(tuple((i, -c) for i, c in self.coeffs))

    def plus(self, other: "Root") -> Dict[int, int]:
        vector = self.vector
        for i, c in other.coeffs:
            vector[i] = vector.get(i, 0) + c
        return {i: c for i, c in vector.items() if c}

    def sum_root(self, other: "Root") -> Optional["Root"]:
        return Root.from_vector(self.plus(other))

    def admissible(self, family: Family) -> bool:
        kind = self.kind
        if family is Family.A:
            return kind == "EiMinusEj"
        if family is Family.B:
            return kind not in ("TwoEi", "MinusTwoEi")
        if family is Family.C:
            return kind not in ("Ei", "MinusEi")
        return kind in ("EiMinusEj", "EiPlusEj", "MinusEiMinusEj")

    def as_weight(self, rank: int) -> Weight:
        return Weight(tuple(self.coefficient(i) for i in range(1, rank + 1)))

    def sort_key(self):
        return tuple((i, -c) for i, c in self.coeffs)

    def __str__(self) -> str:
        text = ""
        for i, c in self.coeffs:
            sign = "-" if c < 0 else ("+" if text else "")
            text += f"{sign}{abs(c) if abs(c) != 1 else ''}e{i}"
        return text

    def __repr__(self) -> str:
        return f"Root({self})"


def roots(lie_type: LieType, window: Optional[int] = None) -> FrozenSet[Root]:
    """All roots of a finite type, or of an infinite type on the indices 1..window"""
    if lie_type.is_infinite:
        if window is None:
            raise ValueError("an infinite type needs an index window")
        count = window
    else:
        count = lie_type.index_count
    family = lie_type.family
    found = set()
    for i, j in combinations(range(1, count + 1), 2):
        found.add(Root.e_diff(i, j))
        found.add(Root.e_diff(j, i))
        if family is not Family.A:
            found.add(Root.e_sum(i, j))
            found.add(Root.neg_sum(i, j))
    for i in range(1, count + 1):
        if family is Family.B:
            found.update((Root.e(i), Root.e(i, -1)))
        elif family is Family.C:
            found.update((Root.two_e(i), Root.two_e(i, -1)))
    return frozenset(found)


def sorted_roots(found) -> list:
    return sorted(found, key=Root.sort_key)
