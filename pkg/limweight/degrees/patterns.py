"""
Gelfand-Tsetlin patterns for finite-dimensional gl(N)-modules.

Dimensions and weight multiplicities are counted by memoized recursion over
the branching gl(N) -> gl(N-1) x gl(1); explicit enumeration is kept for small
cases and for cross-checks.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator, List, Sequence, Tuple

from limweight.core.config.constants import ERROR_MESSAGES
from limweight.core.exceptions import NotDominant
from limweight.weights import Weight

IntWeight = Tuple[int, ...]


def as_dominant(weight) -> IntWeight:
    """Integer tuple of a dominant integral weight, or NotDominant"""
    if isinstance(weight, Weight):
        if not weight.is_dominant_integral:
            raise NotDominant(f"{weight}: {ERROR_MESSAGES['NOT_DOMINANT']}")
        return weight.as_ints()
    values = tuple(weight)
    if not all(isinstance(x, int) for x in values) or any(a < b for a, b in zip(values, values[1:])):
        raise NotDominant(f"{values}: {ERROR_MESSAGES['NOT_DOMINANT']}")
    if not values:
        raise NotDominant("empty weight")
    return values


def interlacing(top: IntWeight) -> List[IntWeight]:
    """All mu with top_i >= mu_i >= top_{i+1}, in descending lexicographic order"""
    ranges = [range(top[i], top[i + 1] - 1, -1) for i in range(len(top) - 1)]
    return [tuple(mu) for mu in product(*ranges)]


@dataclass(frozen=True)
class GTPattern:
    rows: Tuple[IntWeight, ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        for upper, lower in zip(rows, rows[1:]):
            if len(lower) != len(upper) - 1 or lower not in interlacing(upper):
                raise ValueError(f"rows {upper} and {lower} do not interlace")
        if len(rows[-1]) != 1:
            raise ValueError("a pattern ends with a row of length 1")
        object.__setattr__(self, "rows", rows)

    @property
    def top(self) -> IntWeight:
        return self.rows[0]

    @property
    def weight(self) -> IntWeight:
        sums = [sum(r) for r in reversed(self.rows)]
        return tuple(b - a for a, b in zip([0] + sums, sums))

    def __str__(self) -> str:
        return " / ".join(",".join(str(x) for x in r) for r in self.rows)


def gt_patterns(weight) -> Iterator[GTPattern]:
    """Depth-first enumeration in lexicographic order of rows (top row fixed)"""
    top = as_dominant(weight)

    def walk(rows):
        if len(rows[-1]) == 1:
            yield GTPattern(tuple(rows))
            return
        for lower in interlacing(rows[-1]):
            yield from walk(rows + [lower])

    yield from walk([top])


@lru_cache(maxsize=None)
def _dim(top: IntWeight) -> int:
    if len(top) == 1:
        return 1
    return sum(_dim(mu) for mu in interlacing(top))


@lru_cache(maxsize=None)
def _mult(top: IntWeight, nu: IntWeight) -> int:
    if len(top) == 1:
        return int(top == nu)
    target = sum(top) - nu[-1]
    head = nu[:-1]
    return sum(_mult(mu, head) for mu in interlacing(top) if sum(mu) == target)


def dim_fd(weight) -> int:
    return _dim(as_dominant(weight))


def mult_fd(weight, nu) -> int:
    top = as_dominant(weight)
    if isinstance(nu, Weight):
        if not nu.is_integral:
            return 0
        nu = nu.as_ints()
    nu = tuple(nu)
    if len(nu) != len(top) or sum(nu) != sum(top):
        return 0
    return _mult(top, nu)


def weyl_dimension(weight) -> int:
    """prod_{i<j} (l_i - l_j + j - i) / (j - i)"""
    top = as_dominant(weight)
    value = Fraction(1)
    for i in range(len(top)):
        for j in range(i + 1, len(top)):
            value *= Fraction(top[i] - top[j] + j - i, j - i)
    return int(value)


def dominant_weights(weight) -> List[IntWeight]:
    """Dominant weights of L(weight): the non-increasing integer vectors it dominates"""
    top = as_dominant(weight)
    size, total = len(top), sum(top)
    bounds = [sum(top[:k + 1]) for k in range(size)]
    found = []

    def walk(prefix, running, ceiling):
        k = len(prefix)
        if k == size:
            if running == total:
                found.append(tuple(prefix))
            return
        remaining = size - k
        for value in range(min(ceiling, top[0]), top[-1] - 1, -1):
            partial = running + value
            if partial > bounds[k] or partial + top[-1] * (remaining - 1) > total:
                continue
            if partial + value * (remaining - 1) < total:
                break
            walk(prefix + [value], partial, value)

    walk([], 0, top[0])
    return found


def balanced_weight(weight) -> IntWeight:
    """The dominant weight whose entries differ pairwise by at most one"""
    top = as_dominant(weight)
    q, r = divmod(sum(top), len(top))
    return (q + 1,) * r + (q,) * (len(top) - r)


def weight_multiplicities(weight) -> dict:
    """Every weight of L(weight) with its multiplicity, from the patterns"""
    found: dict = {}
    for pattern in gt_patterns(weight):
        found[pattern.weight] = found.get(pattern.weight, 0) + 1
    return dict(sorted(found.items(), reverse=True))


def dual_weight(weight: Sequence[int]) -> IntWeight:
    """Highest weight of the dual module: reverse and negate"""
    return tuple(-x for x in reversed(tuple(weight)))
