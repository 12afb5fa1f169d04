from fractions import Fraction
from typing import Union

from limweight.core.exceptions import NotSemiInfinite, NotSignVector
from limweight.weights import ExtScalar, SetDescriptor, WeightSeq, horizon

HALF = ExtScalar(Fraction(1, 2))
MINUS_HALF = ExtScalar(Fraction(-1, 2))

SignVector = Union[SetDescriptor, WeightSeq]


def approx_equiv(a: SetDescriptor, b: SetDescriptor, balanced: bool = False) -> bool:
    """
    A ~ B for semi-infinite sets: they agree outside finite parts.

    With ``balanced`` the removed parts must also have equal size, the
    condition under which the exterior powers along A and B have the same
    degrees in every rank.
    """
    for s in (a, b):
        if not s.is_semi_infinite:
            raise NotSemiInfinite(f"{s} is not semi-infinite")
    if not a.differs_finitely(b):
        return False
    if not balanced:
        return True
    return (a - b).cardinality() == (b - a).cardinality()


def sinf_equiv(a: WeightSeq, b: WeightSeq) -> bool:
    """a_n = b_n for all large n"""
    length, period = horizon(a, b)
    a, b = a.normalized(length, period), b.normalized(length, period)
    return a.tail == b.tail and a.step == b.step


def sign_locus(v: SignVector) -> SetDescriptor:
    """The +1/2 locus of a sign vector; a set is taken as its own locus"""
    if isinstance(v, SetDescriptor):
        return v
    plus, minus = v.value_locus(HALF), v.value_locus(MINUS_HALF)
    if not (plus | minus).complement().is_empty:
        raise NotSignVector(f"{v} has entries other than +-1/2")
    return plus


def omega(subset: SetDescriptor) -> WeightSeq:
    """+1/2 on the set and -1/2 elsewhere"""
    return WeightSeq.indicator(subset, HALF, MINUS_HALF)


def spinor_equiv_B(lam: SignVector, mu: SignVector) -> bool:
    """Equal in all but finitely many entries"""
    return sign_locus(lam).differs_finitely(sign_locus(mu))


def spinor_equiv_D(lam: SignVector, mu: SignVector) -> bool:
    """Different in an even number of entries"""
    difference = sign_locus(lam) ^ sign_locus(mu)
    return difference.is_finite and difference.cardinality() % 2 == 0
