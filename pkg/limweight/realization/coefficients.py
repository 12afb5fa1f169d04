"""
Operator coefficients.

Coefficients stay ``Fraction`` while every factor is rational and become
expanded sympy polynomials in the generic symbols otherwise.
"""
from fractions import Fraction
from typing import Union

import sympy

from limweight.weights import ExtScalar

Coeff = Union[Fraction, sympy.Expr]


def from_scalar(x: ExtScalar) -> Coeff:
    return x.value if x.is_rational else x.to_expr()


def _coerce(c) -> Coeff:
    return Fraction(c) if isinstance(c, int) else c


def _expr(c: Coeff) -> sympy.Expr:
    if isinstance(c, Fraction):
        return sympy.Rational(c.numerator, c.denominator)
    return c


def _settle(expr: sympy.Expr) -> Coeff:
    expr = sympy.expand(expr)
    if expr.is_Rational:
        return Fraction(int(expr.p), int(expr.q))
    return expr


def add(a: Coeff, b: Coeff) -> Coeff:
    a, b = _coerce(a), _coerce(b)
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a + b
    return _settle(_expr(a) + _expr(b))


def mul(a: Coeff, b: Coeff) -> Coeff:
    a, b = _coerce(a), _coerce(b)
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a * b
    return _settle(_expr(a) * _expr(b))


def is_zero(c: Coeff) -> bool:
    if isinstance(c, Fraction):
        return c == 0
    return sympy.expand(c) == 0


def falling(x: ExtScalar, k: int) -> Coeff:
    """x (x-1) ... (x-k+1)"""
    result: Coeff = Fraction(1)
    for t in range(k):
        result = mul(result, from_scalar(x - t))
    return result


def format_coeff(c: Coeff) -> str:
    if isinstance(c, Fraction):
        return str(c)
    return str(sympy.expand(c)).replace(" ", "")
