"""
Degrees of finite-dimensional gl(N)-modules and the lower bounds used to
classify integrable bounded modules.
"""
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, product
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from limweight.core.config.constants import DEFAULT_LEMMA_DEG_DEPTH
from limweight.core.exceptions import HypothesisViolated, NotDominant
from limweight.weights import Weight

from .patterns import (
    IntWeight,
    as_dominant,
    dim_fd,
    dominant_weights,
    interlacing,
    mult_fd,
)


@dataclass(frozen=True)
class BoundReport:
    lhs: int
    rhs: int
    witness: Optional[str] = None

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs


@dataclass(frozen=True)
class LemmaDegReport:
    """lhs (the degree of an infinite-dimensional module) is never computed"""

    rhs: int
    identity_holds: bool
    window_size: int
    mismatch: Optional[str] = None
    lhs: Optional[int] = None

    @property
    def holds(self) -> bool:
        return self.identity_holds


def deg_fd(weight) -> int:
    return max(mult_fd(weight, nu) for nu in dominant_weights(weight))


def argmax_weights(weight) -> List[IntWeight]:
    """Dominant weights where the degree is attained"""
    best = deg_fd(weight)
    return [nu for nu in dominant_weights(weight) if mult_fd(weight, nu) == best]


def lp_rp(weight: Sequence) -> Tuple[int, int]:
    """Lengths of the constant initial and final runs"""
    values = list(weight)
    lp = 1
    while lp < len(values) and values[lp] == values[0]:
        lp += 1
    rp = 1
    while rp < len(values) and values[-rp - 1] == values[-1]:
        rp += 1
    return lp, rp


def _require(condition: bool, message: str):
    if not condition:
        raise HypothesisViolated(message)


def _dominant(weight) -> IntWeight:
    try:
        return as_dominant(weight)
    except NotDominant as e:
        raise HypothesisViolated(str(e))


def equal_size_pairs(weight) -> List[Tuple[IntWeight, IntWeight]]:
    """Pairs of distinct weights interlacing ``weight`` with equal size"""
    by_size = defaultdict(list)
    for mu in interlacing(_dominant(weight)):
        by_size[sum(mu)].append(mu)
    return [pair for group in by_size.values() for pair in combinations(group, 2)]


def verify_lem0(weight, first, second) -> BoundReport:
    """d(lambda) >= d(mu') + d(mu'') for distinct mu', mu'' in GT(lambda) of equal size"""
    top = _dominant(weight)
    first, second = tuple(first), tuple(second)
    candidates = interlacing(top)
    _require(first in candidates and second in candidates, "both weights must interlace lambda")
    _require(first != second, "the two weights must differ")
    _require(sum(first) == sum(second), "the two weights must have equal size")
    return BoundReport(deg_fd(top), deg_fd(first) + deg_fd(second), f"{first}+{second}")


def verify_lem1(x: int, ell: int) -> BoundReport:
    """d((x, 1, 0^(ell-1))) >= min(x, ell)"""
    _require(x >= 2 and ell >= 2, "x and ell must be at least 2")
    top = (x, 1) + (0,) * (ell - 1)
    return BoundReport(deg_fd(top), min(x, ell), str(top))


def verify_lem2(x: int, k: int, ell: int) -> BoundReport:
    """d((x^(k), 0^(ell))) against the larger of the two displayed bounds"""
    _require(x >= 2, "x must be at least 2")
    _require(k >= 1 and ell >= 1, "k and ell must be positive")
    top = (x,) * k + (0,) * ell
    rhs = max(min(1 + (k - 1) * (x - 1), ell), min(1 + (ell - 1) * (x - 1), k))
    return BoundReport(deg_fd(top), rhs, str(top))


def verify_lem3(weight) -> BoundReport:
    """d(lambda) >= min(N - rp, N - lp) when lambda_1 - lambda_N > 1"""
    top = _dominant(weight)
    _require(top[0] - top[-1] > 1, "lambda_1 - lambda_last must exceed 1")
    lp, rp = lp_rp(top)
    size = len(top)
    return BoundReport(deg_fd(top), min(size - rp, size - lp), f"lp={lp} rp={rp}")


def verify_lem4(weight, ell: int) -> BoundReport:
    """d((lambda, 0^(ell))) >= min(lambda_1, ell)"""
    head = _dominant(weight)
    _require(len(head) >= 2, "lambda needs at least two entries")
    _require(head[0] >= 2 and head[-1] > 0, "need lambda_1 >= 2 and lambda_k > 0")
    _require(ell >= 0, "ell must be non-negative")
    top = head + (0,) * ell
    return BoundReport(deg_fd(top), min(head[0], ell), str(top))


# Parabolic restriction behind the degree bound for infinite-dimensional L(lambda)


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def _induced_mult(tail: IntWeight, depth: int, nu: IntWeight) -> int:
    """Weight multiplicity of U(u-) (x) F where u- spans e_{j1}, j in the tail, and F = gl(1) x L(tail)

    The weight is given as (J, nu_tail) with J the drop of the first coordinate.
    """
    count = 0
    for c in _compositions(depth, len(tail)):
        count += mult_fd(tail, tuple(a - b for a, b in zip(nu, c)))
    return count


def _parabolic_rhs(tail: IntWeight, drop: int, rest: IntWeight) -> int:
    middle, last = rest[:-1], rest[-1]
    total = 0
    for kappa in interlacing(tail):
        charge = sum(tail) - sum(kappa)
        j = last - charge
        if j < 0 or j > drop:
            continue
        total += _induced_mult(kappa, drop - j, middle)
    return total


def parabolic_restriction_check(weight: Weight, depth: int = DEFAULT_LEMMA_DEG_DEPTH) -> Tuple[bool, int, Optional[str]]:
    """Compare both sides of the restricted parabolic character identity on a window

    Returns (holds, number of window weights, first mismatch).
    """
    shift = weight.entry(weight.rank)
    tail = tuple((x - shift).as_int() for x in weight.entries[1:])
    low, high = tail[-1], tail[0] + depth
    size = sum(tail)
    checked = 0
    for drop in range(depth + 1):
        for rest in product(range(low, high + 1), repeat=len(tail)):
            if sum(rest) != size + drop:
                continue
            checked += 1
            lhs = _induced_mult(tail, drop, rest)
            rhs = _parabolic_rhs(tail, drop, rest)
            if lhs != rhs:
                return False, checked, f"drop={drop} weight={rest}: {lhs} != {rhs}"
    return True, checked, None


def verify_lemma_deg(weight: Weight, depth: int = DEFAULT_LEMMA_DEG_DEPTH) -> LemmaDegReport:
    """rhs = dim L(lambda_3, ..., lambda_{n+1}) plus the window check of the parabolic identity"""
    weight = weight if isinstance(weight, Weight) else Weight.from_values(weight)
    _require(weight.rank > 4, "the bound needs n > 3")
    for a, b in zip(weight.entries[1:], weight.entries[2:]):
        d = a.difference(b)
        _require(d is not None and d.denominator == 1 and d >= 0,
                 "lambda_i - lambda_{i+1} must be a non-negative integer for i >= 2")
    d = weight.entry(1).difference(weight.entry(2))
    _require(d is None or d.denominator != 1 or d < 0, "L(lambda) must be infinite dimensional")
    shift = weight.entry(weight.rank)
    rhs = dim_fd(tuple((x - shift).as_int() for x in weight.entries[2:]))
    holds, checked, mismatch = parabolic_restriction_check(weight, depth)
    logger.debug("parabolic identity for {} on {} weights: {}", weight, checked, holds)
    return LemmaDegReport(rhs=rhs, identity_holds=holds, window_size=checked, mismatch=mismatch)
