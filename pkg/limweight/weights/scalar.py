"""
Exact scalars for weight entries.

An ``ExtScalar`` is either a rational number or a generic value ``c_t + q``
where ``c_t`` is a transcendental labelled by an integer tag and ``q`` is a
rational offset. Only integrality structure is ever inspected: two generic
values differ by an integer exactly when they share a tag and their offsets
differ by an integer.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import sympy

from limweight.core.config.constants import ERROR_MESSAGES
from limweight.core.exceptions import MixedGenericTags, ParseError

ScalarLike = Union["ExtScalar", int, Fraction, str]

_RATIONAL = re.compile(r"\s*([+-]?\s*\d+(?:\s*/\s*\d+)?)\s*")
_GENERIC = re.compile(r"\s*g(\d+)\s*(?:([+-])\s*(\d+(?:\s*/\s*\d+)?))?\s*")


def _fraction(text: str) -> Fraction:
    return Fraction(text.replace(" ", ""))


@dataclass(frozen=True)
class ExtScalar:
    value: Fraction = Fraction(0)
    tag: Optional[int] = None

    def __post_init__(self):
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))

    # Construction

    @classmethod
    def rational(cls, value) -> "ExtScalar":
        return cls(Fraction(value))

    @classmethod
    def generic(cls, tag: int, offset=0) -> "ExtScalar":
        return cls(Fraction(offset), int(tag))

    @classmethod
    def coerce(cls, x: ScalarLike) -> "ExtScalar":
        if isinstance(x, ExtScalar):
            return x
        if isinstance(x, str):
            return cls.parse(x)
        if isinstance(x, (int, Fraction)):
            return cls(Fraction(x))
        raise TypeError(f"cannot interpret {x!r} as a scalar")

    @classmethod
    def parse(cls, text: str) -> "ExtScalar":
        m = _GENERIC.fullmatch(text)
        if m:
            offset = Fraction(0)
            if m.group(3):
                offset = _fraction(m.group(3))
                if m.group(2) == "-":
                    offset = -offset
            return cls.generic(int(m.group(1)), offset)
        m = _RATIONAL.fullmatch(text)
        if m:
            try:
                return cls(_fraction(m.group(1)))
            except ZeroDivisionError:
                raise ParseError("zero denominator", 0, text)
        raise ParseError(f"not a scalar: {text!r}", 0, text)

    # Classification

    @property
    def is_generic(self) -> bool:
        return self.tag is not None

    @property
    def is_rational(self) -> bool:
        return self.tag is None

    @property
    def is_integer(self) -> bool:
        return self.tag is None and self.value.denominator == 1

    @property
    def is_nonneg_integer(self) -> bool:
        return self.is_integer and self.value >= 0

    @property
    def is_neg_integer(self) -> bool:
        return self.is_integer and self.value < 0

    @property
    def is_zero(self) -> bool:
        return self.tag is None and self.value == 0

    def int_class(self) -> int:
        """+1 for Z>=0, -1 for Z<0, 0 outside Z"""
        if not self.is_integer:
            return 0
        return 1 if self.value >= 0 else -1

    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return int(self.value)

    # Arithmetic

    def __add__(self, other: ScalarLike) -> "ExtScalar":
        other = ExtScalar.coerce(other)
        if self.is_generic and other.is_generic:
            raise MixedGenericTags(f"{self} + {other}: {ERROR_MESSAGES['MIXED_TAGS']}")
        tag = self.tag if self.is_generic else other.tag
        return ExtScalar(self.value + other.value, tag)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "ExtScalar":
        other = ExtScalar.coerce(other)
        if other.is_rational:
            return ExtScalar(self.value - other.value, self.tag)
        if self.tag == other.tag:
            return ExtScalar(self.value - other.value)
        raise MixedGenericTags(f"{self} - {other}: {ERROR_MESSAGES['MIXED_TAGS']}")

    def __rsub__(self, other: ScalarLike) -> "ExtScalar":
        return ExtScalar.coerce(other) - self

    def __neg__(self) -> "ExtScalar":
        return self.scale(-1)

    def scale(self, k) -> "ExtScalar":
        k = Fraction(k)
        if self.is_rational:
            return ExtScalar(self.value * k)
        if k == 1:
            return self
        if k == 0:
            return ExtScalar()
        raise MixedGenericTags(f"{k}*{self}: {ERROR_MESSAGES['MIXED_TAGS']}")

    def __mul__(self, k) -> "ExtScalar":
        if isinstance(k, ExtScalar):
            if k.is_generic:
                return k.scale(self._require_rational())
            k = k.value
        return self.scale(k)

    __rmul__ = __mul__

    def __truediv__(self, k) -> "ExtScalar":
        return self.scale(1 / Fraction(k))

    def _require_rational(self) -> Fraction:
        if self.is_generic:
            raise MixedGenericTags(f"{self}: {ERROR_MESSAGES['MIXED_TAGS']}")
        return self.value

    def difference(self, other: ScalarLike) -> Optional[Fraction]:
        """``self - other`` when it is rational, else None"""
        other = ExtScalar.coerce(other)
        if self.tag != other.tag:
            return None
        return self.value - other.value

    def differs_by_integer(self, other: ScalarLike) -> bool:
        d = self.difference(other)
        return d is not None and d.denominator == 1

    # Ordering only between rationals

    def __lt__(self, other: ScalarLike) -> bool:
        return self._require_rational() < ExtScalar.coerce(other)._require_rational()

    def __le__(self, other: ScalarLike) -> bool:
        return self._require_rational() <= ExtScalar.coerce(other)._require_rational()

    def __gt__(self, other: ScalarLike) -> bool:
        return self._require_rational() > ExtScalar.coerce(other)._require_rational()

    def __ge__(self, other: ScalarLike) -> bool:
        return self._require_rational() >= ExtScalar.coerce(other)._require_rational()

    def sort_key(self):
        if self.is_rational:
            return (0, 0, self.value)
        return (1, self.tag, self.value)

    # Conversion

    def to_expr(self) -> sympy.Expr:
        q = sympy.Rational(self.value.numerator, self.value.denominator)
        if self.is_rational:
            return q
        return generic_symbol(self.tag) + q

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.value)
        if self.value == 0:
            return f"g{self.tag}"
        sign = "+" if self.value > 0 else "-"
        return f"g{self.tag}{sign}{abs(self.value)}"

    def __repr__(self) -> str:
        return f"ExtScalar({self})"


def generic_symbol(tag: int) -> sympy.Symbol:
    return sympy.Symbol(f"g{tag}")


ZERO = ExtScalar()
ONE = ExtScalar(Fraction(1))
HALF = ExtScalar(Fraction(1, 2))
