from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Tuple

from limweight.weights import Weight

from . import coefficients as cf
from .coefficients import Coeff

Combination = Dict[Weight, Coeff]


@dataclass(frozen=True)
class WeylOperator:
    """Normally ordered element sum c * x^a d^b of the Weyl algebra

    ``terms`` holds ((a, b), c) with exponent tuples a, b of length ``size``.
    """

    size: int
    terms: Tuple[Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], Fraction], ...]

    @classmethod
    def monomial(cls, size: int, coeff=1, x: Mapping[int, int] = None, d: Mapping[int, int] = None) -> "WeylOperator":
        x, d = x or {}, d or {}
        a = tuple(x.get(i, 0) for i in range(1, size + 1))
        b = tuple(d.get(i, 0) for i in range(1, size + 1))
        return cls(size, (((a, b), Fraction(coeff)),))

    def __add__(self, other: "WeylOperator") -> "WeylOperator":
        merged: Dict = dict(self.terms)
        for key, c in other.terms:
            merged[key] = merged.get(key, Fraction(0)) + c
        return WeylOperator(self.size, tuple(sorted((k, c) for k, c in merged.items() if c)))

    def apply(self, exponent: Weight) -> Combination:
        """Action on the shifted monomial x^exponent"""
        result: Combination = {}
        for (a, b), c in self.terms:
            coeff: Coeff = c
            for i, k in enumerate(b, 1):
                if k:
                    coeff = cf.mul(coeff, cf.falling(exponent.entry(i), k))
            if cf.is_zero(coeff):
                continue
            target = exponent + tuple(ai - bi for ai, bi in zip(a, b))
            total = cf.add(result.get(target, Fraction(0)), coeff)
            if cf.is_zero(total):
                result.pop(target, None)
            else:
                result[target] = total
        return result


def apply_to(op: WeylOperator, combo: Combination) -> Combination:
    result: Combination = {}
    for exponent, c in combo.items():
        for target, d in op.apply(exponent).items():
            total = cf.add(result.get(target, Fraction(0)), cf.mul(c, d))
            if cf.is_zero(total):
                result.pop(target, None)
            else:
                result[target] = total
    return result


def combine(*pairs) -> Combination:
    """Sum of coefficient * combination pairs"""
    result: Combination = {}
    for scale, combo in pairs:
        for exponent, c in combo.items():
            total = cf.add(result.get(exponent, Fraction(0)), cf.mul(scale, c))
            if cf.is_zero(total):
                result.pop(exponent, None)
            else:
                result[exponent] = total
    return result
