from dataclasses import dataclass
from typing import Optional

from limweight.core.exceptions import NotFiniteDimensional
from limweight.weights import ExtScalar, Weight, abs_sum, int_sets

from .finiteness import is_finite_dim_Xsl, warn_outside_range


@dataclass(frozen=True)
class CentralCharLabel:
    """SlChi(c, n) names chi_{c e_1 + rho} of gl(n+1); SpSW names chi_sw"""

    kind: str
    c: Optional[ExtScalar] = None
    n: Optional[int] = None

    @classmethod
    def sl_chi(cls, c: ExtScalar, n: int) -> "CentralCharLabel":
        return cls("SlChi", c, n)

    @classmethod
    def sp_sw(cls) -> "CentralCharLabel":
        return cls("SpSW")

    def __str__(self) -> str:
        if self.kind == "SpSW":
            return "chi_sw"
        return f"chi({self.c}e1+rho; n={self.n})"


@dataclass(frozen=True)
class SymPowerLabel:
    power: int
    dual: bool = False

    def __str__(self) -> str:
        return f"S^{self.power}(V{'*' if self.dual else ''})"


def central_char_Xsl(mu: Weight, n: Optional[int] = None) -> CentralCharLabel:
    n = mu.rank - 1 if n is None else n
    return CentralCharLabel.sl_chi(abs_sum(mu), n)


def central_char_Xsp(mu: Weight) -> CentralCharLabel:
    if mu.rank <= 3:
        warn_outside_range("central_char_Xsp", mu.rank, 3)
    return CentralCharLabel.sp_sw()


def finite_dim_identify_Xsl(mu: Weight, n: Optional[int] = None) -> SymPowerLabel:
    """S^m(V) when every entry is a non-negative integer, S^m(V*) when every entry is negative"""
    if not is_finite_dim_Xsl(mu):
        raise NotFiniteDimensional(f"X_sl{mu} is infinite dimensional")
    _, plus, _ = int_sets(mu)
    values = mu.as_ints()
    if len(plus) == mu.rank:
        return SymPowerLabel(sum(values))
    return SymPowerLabel(sum(-1 - v for v in values), dual=True)
