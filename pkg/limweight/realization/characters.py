from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import List, Optional

from limweight.degrees import mult_fd, weight_multiplicities
from limweight.degrees.patterns import as_dominant
from limweight.weights import Weight

_HALF = Fraction(1, 2)


class CharacterKind(str, Enum):
    FINITE_DIM_GL = "FiniteDimGL"
    SPINOR_B = "SpinorB"
    SPINOR_D_PLUS = "SpinorDPlus"
    SPINOR_D_MINUS = "SpinorDMinus"
    SHALE_WEIL_EVEN = "ShaleWeilEven"
    SHALE_WEIL_ODD = "ShaleWeilOdd"


_SPINORS = (CharacterKind.SPINOR_B, CharacterKind.SPINOR_D_PLUS, CharacterKind.SPINOR_D_MINUS)
_SHALE_WEIL = (CharacterKind.SHALE_WEIL_EVEN, CharacterKind.SHALE_WEIL_ODD)


@dataclass(frozen=True)
class CharacterModel:
    """Weight multiplicities of a finite-dimensional gl-module, a spinor module or a Shale-Weil module"""

    kind: CharacterKind
    rank: int
    top: Optional[Weight] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", CharacterKind(self.kind))
        if self.kind is CharacterKind.FINITE_DIM_GL:
            as_dominant(self.top)
        if self.rank < 1:
            raise ValueError("rank must be positive")

    @classmethod
    def finite_dim_gl(cls, weight: Weight) -> "CharacterModel":
        return cls(CharacterKind.FINITE_DIM_GL, weight.rank, weight)

    @classmethod
    def of(cls, kind: CharacterKind, n: int) -> "CharacterModel":
        return cls(kind, n)

    @property
    def highest_weight(self) -> Weight:
        n = self.rank
        if self.kind is CharacterKind.FINITE_DIM_GL:
            return self.top
        if self.kind is CharacterKind.SPINOR_D_MINUS:
            return Weight.constant(n, _HALF).with_entry(n, -_HALF)
        if self.kind is CharacterKind.SHALE_WEIL_ODD:
            return Weight.constant(n, _HALF).with_entry(1, 3 * _HALF)
        return Weight.constant(n, _HALF)

    def multiplicity(self, nu: Weight) -> int:
        if nu.rank != self.rank:
            return 0
        if self.kind is CharacterKind.FINITE_DIM_GL:
            return mult_fd(self.top, nu)
        if self.kind in _SPINORS:
            if not all(x.is_rational and abs(x.value) == _HALF for x in nu):
                return 0
            minus = sum(1 for x in nu if x.value < 0)
            if self.kind is CharacterKind.SPINOR_D_PLUS:
                return int(minus % 2 == 0)
            if self.kind is CharacterKind.SPINOR_D_MINUS:
                return int(minus % 2 == 1)
            return 1
        shifted = [x - _HALF for x in nu]
        if not all(x.is_nonneg_integer for x in shifted):
            return 0
        parity = sum(x.as_int() for x in shifted) % 2
        return int(parity == (0 if self.kind is CharacterKind.SHALE_WEIL_EVEN else 1))

    def weights(self, bound: int = 3) -> List[Weight]:
        """All weights for the finite-dimensional kinds; Shale-Weil weights of degree at most ``bound``"""
        if self.kind is CharacterKind.FINITE_DIM_GL:
            return [Weight.from_values(nu) for nu in weight_multiplicities(self.top)]
        if self.kind in _SPINORS:
            candidates = (Weight.from_values(v) for v in product((_HALF, -_HALF), repeat=self.rank))
        else:
            candidates = (
                Weight.from_values(x + _HALF for x in v)
                for v in product(range(bound + 1), repeat=self.rank)
                if sum(v) <= bound
            )
        return sorted((w for w in candidates if self.multiplicity(w)), key=Weight.sort_key, reverse=True)

    def __str__(self) -> str:
        if self.kind is CharacterKind.FINITE_DIM_GL:
            return f"L{self.top}"
        return f"{self.kind.value}({self.rank})"


def character_multiplicity(model: CharacterModel, nu: Weight) -> int:
    return model.multiplicity(nu)
