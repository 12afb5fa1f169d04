from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, FrozenSet, Iterable, Union

from limweight.weights import ExtScalar, Weight, WeightSeq

from .lie_type import Family, LieType
from .roots import Root, roots

AnyWeight = Union[Weight, WeightSeq]


class SupportOracle:
    """Membership test for a set of weights"""

    def __init__(self, predicate: Callable[[AnyWeight], bool], description: str = ""):
        self._predicate = predicate
        self.description = description

    def __contains__(self, weight: AnyWeight) -> bool:
        return bool(self._predicate(weight))

    def contains(self, weight: AnyWeight) -> bool:
        return weight in self

    def __repr__(self) -> str:
        return f"SupportOracle({self.description})"


@dataclass(frozen=True)
class RootPartition:
    fin: FrozenSet[Root]
    inf: FrozenSet[Root]

    @property
    def all(self) -> FrozenSet[Root]:
        return self.fin | self.inf


def _finite_entries(v: AnyWeight):
    """Entries of v when it has finite support, else None"""
    if isinstance(v, Weight):
        return v.entries
    if not v.is_finitely_supported:
        return None
    return v.prefix


def lattice_member(lie_type: LieType, v: AnyWeight) -> bool:
    """Membership in the root lattice (the gl coset lattice for type A)"""
    entries = _finite_entries(v)
    if entries is None or not all(x.is_integer for x in entries):
        return False
    total = sum(x.as_int() for x in entries)
    if lie_type.family is Family.A:
        return total == 0
    if lie_type.family is Family.B:
        return True
    return total % 2 == 0


def natural_support(lie_type: LieType) -> SupportOracle:
    """Weights of the natural module, on gl representatives for type A"""
    family = lie_type.family

    def predicate(v: AnyWeight) -> bool:
        entries = _finite_entries(v)
        if entries is None:
            return False
        if not lie_type.is_infinite and len(entries) > lie_type.index_count:
            return False
        nonzero = [x for x in entries if not x.is_zero]
        if not nonzero:
            return family is Family.B
        if len(nonzero) != 1:
            return False
        if family is Family.A:
            return nonzero[0] == ExtScalar(Fraction(1))
        return nonzero[0] in (ExtScalar(Fraction(1)), ExtScalar(Fraction(-1)))

    return SupportOracle(predicate, f"Supp V for {lie_type}")


def rho(lie_type: LieType) -> Weight:
    """Half sum of positive roots for the natural order (sigma = +1 for B, C, D)"""
    n = lie_type.rank
    if n is None:
        raise ValueError("rho is only defined at finite rank")
    if lie_type.family is Family.A:
        return Weight(tuple(Fraction(n - 2 * k, 2) for k in range(n + 1)))
    if lie_type.family is Family.B:
        return Weight(tuple(Fraction(2 * (n - k) - 1, 2) for k in range(n)))
    if lie_type.family is Family.C:
        return Weight(tuple(n - k for k in range(n)))
    return Weight(tuple(n - 1 - k for k in range(n)))


def delta_sl_I(subset: Iterable[int], n: int) -> FrozenSet[Root]:
    """{e_i - e_j : i in I, j not in I} on the indices 1..n+1"""
    inside = frozenset(subset)
    outside = [j for j in range(1, n + 2) if j not in inside]
    return frozenset(Root.e_diff(i, j) for i in inside for j in outside)


def delta_sp_J(subset: Iterable[int], n: int) -> FrozenSet[Root]:
    """{e_i + e_j (i, j in J), e_i - e_k (i in J, k not in J), -e_k - e_l (k, l not in J)}"""
    inside = sorted(frozenset(subset))
    outside = [k for k in range(1, n + 1) if k not in inside]
    found = set()
    for a, i in enumerate(inside):
        for j in inside[a:]:
            found.add(Root.e_sum(i, j))
        for k in outside:
            found.add(Root.e_diff(i, k))
    for a, k in enumerate(outside):
        for l in outside[a:]:
            found.add(Root.neg_sum(k, l))
    return frozenset(found)


def partition_roots(lie_type: LieType, fin: Iterable[Root], window=None) -> RootPartition:
    everything = roots(lie_type, window)
    fin = frozenset(fin) & everything
    return RootPartition(fin, everything - fin)
