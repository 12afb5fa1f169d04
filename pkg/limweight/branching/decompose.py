"""
Restriction of X-modules to the stabilizer of the last coordinate.

X_sl(mu) over gl(n+1) restricts to gl(n) as a sum over k in S(mu): the
x_{n+1}-exponent is fixed to mu_{n+1} - k and the remaining exponents form
X_sl(mu_bar + mu(k)). X_sp(mu) over sp(2n) restricts to sp(2n-2) + C the same
way, with mu'_n running over the ~_D class of mu_n and the parity of the
dropped shift absorbed by e_1.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from loguru import logger

from limweight.classify.equivalence import sim_sl, sim_sp, sim_weyl
from limweight.core.config import settings
from limweight.core.config.constants import ERROR_MESSAGES
from limweight.core.exceptions import MixedGenericTags, RankTooSmall
from limweight.realization.xmodule import ModuleFamily, XModule, basis_window
from limweight.weights import ExtScalar, Weight, WeightSeq

from .s_sets import Box, resolve_box, s_set, s_set_member


def parity(a: int) -> int:
    return a % 2


def neg(z: ExtScalar) -> int:
    return -1 if z.is_neg_integer else 1


def _same(a: ExtScalar, b: ExtScalar) -> bool:
    return a.difference(b) == 0


def _sim(family: ModuleFamily, a: Weight, b: Weight) -> bool:
    return sim_sl(a, b) if family is ModuleFamily.SL else sim_sp(a, b)


@dataclass(frozen=True)
class BranchSummand:
    family: ModuleFamily
    representative: Weight
    charge: ExtScalar
    k: Optional[int] = None

    @property
    def label(self) -> str:
        return f"X_{self.family.value}{self.representative};{self.charge}"

    def contains(self, exponent: Weight) -> bool:
        """Whether the monomial x^exponent of the parent module lies in this summand"""
        size = self.representative.rank
        if exponent.rank != size + 1 or not _same(exponent.entry(size + 1), self.charge):
            return False
        return _sim(self.family, exponent.head(size), self.representative)

    def sample(self, radius: Optional[int] = None) -> List[Weight]:
        """A few exponents of the summand, charge appended"""
        if self.family is ModuleFamily.SL and self.representative.rank < 2:
            heads = [self.representative]
        else:
            module = XModule(self.family, self.representative)
            heads = [m.exponent for m in basis_window(module, radius)]
        tail = Weight.of(self.charge)
        return [head.concat(tail) for head in heads]

    def __str__(self) -> str:
        return self.label


def branch_Xsl(mu: Weight, k_box: Optional[Box] = None) -> List[BranchSummand]:
    """gl(n)-summands of X_sl(mu), one per k in S(mu) inside the box"""
    if mu.rank < 2:
        raise RankTooSmall(f"X_sl needs rank at least 2, got {mu.rank}")
    last = mu.entry(mu.rank)
    head = mu.head(mu.rank - 1)
    report = s_set(mu, k_box)
    summands = []
    for k in report.members:
        shift = s_set_member(mu, k)
        if shift is None:
            continue
        summands.append(BranchSummand(ModuleFamily.SL, head + shift, last - k, k))
    logger.debug("{}: {} gl summands, S shape {}", mu, len(summands), report.shape)
    return summands


def _weyl_partners(x: ExtScalar, box: Tuple[int, int]) -> List[int]:
    """Shifts t in the box with x + t ~_D x"""
    anchor = Weight.of(x)
    found = []
    for t in range(box[0], box[1] + 1):
        try:
            if sim_weyl(anchor, Weight.of(x + t)):
                found.append(t)
        except MixedGenericTags:
            continue
    return found


def branch_Xsp(mu: Weight, box: Optional[Box] = None) -> List[BranchSummand]:
    """sp(2n-2) + C summands of X_sp(mu), one per mu'_n ~_D mu_n inside mu_n + box"""
    n = mu.rank
    if n <= 2:
        raise RankTooSmall(f"sp({2 * n}): {ERROR_MESSAGES['RANK_TOO_SMALL']}")
    last = mu.entry(n)
    head = mu.head(n - 1)
    direction = neg(mu.entry(1))
    summands = []
    for t in _weyl_partners(last, resolve_box(box)):
        flip = parity(-t) * direction
        representative = head.shifted(1, flip) if flip else head
        summands.append(BranchSummand(ModuleFamily.SP, representative, last + t, t))
    logger.debug("{}: {} sp summands", mu, len(summands))
    return summands


def branch(family: ModuleFamily, mu: Weight, box: Optional[Box] = None) -> List[BranchSummand]:
    family = ModuleFamily(family)
    if family is ModuleFamily.SL:
        return branch_Xsl(mu, box)
    return branch_Xsp(mu, box)


# Window checks


def _box_shifts(size: int, radius: int):
    if size == 0:
        yield ()
        return
    for head in range(-radius, radius + 1):
        for rest in _box_shifts(size - 1, radius):
            yield (head,) + rest


@dataclass
class BranchCheck:
    family: ModuleFamily
    mu: Weight
    checked: int = 0
    summands: int = 0
    discrepancies: List[Dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def verify_branch(family: ModuleFamily, mu: Weight, window: Optional[int] = None) -> BranchCheck:
    """
    Compare the support of X(mu) with the union of the branch summands on the
    box mu + [-window, window]^rank.

    Every weight of X(mu) in the box must lie in exactly one summand and no
    other weight in any.
    """
    family = ModuleFamily(family)
    window = settings.SEARCH_BOX if window is None else window
    summands = branch(family, mu, window)
    check = BranchCheck(family, mu, summands=len(summands))
    parent = sim_sl if family is ModuleFamily.SL else sim_sp
    for shift in _box_shifts(mu.rank, window):
        exponent = mu + shift
        expected = 1 if parent(exponent, mu) else 0
        found = sum(1 for s in summands if s.contains(exponent))
        check.checked += 1
        if found != expected:
            check.discrepancies.append(
                {"exponent": str(exponent), "expected": expected, "found": found}
            )
    if check.discrepancies:
        logger.warning(
            "{}{}: {} of {} window weights disagree",
            family.value, mu, len(check.discrepancies), check.checked,
        )
    return check


def coherence_window(
    family: ModuleFamily, lower: Weight, upper: Weight, window: Optional[int] = None,
) -> List[Dict]:
    """
    Compare X(lower) with the slice of X(upper) whose last coordinate is the
    last entry of upper, on the box lower + [-window, window]^rank.

    A weight disagrees when membership in X(lower), in X(upper) after appending
    the charge, and in the matching branch summand are not all equal. A count
    other than one of summands isomorphic to X(lower) is reported first.
    """
    family = ModuleFamily(family)
    window = settings.WINDOW_RADIUS if window is None else window
    charge = upper.entry(upper.rank)
    hits = [
        s for s in branch(family, upper)
        if _same(s.charge, charge) and _sim(family, s.representative, lower)
    ]
    mismatches: List[Dict] = []
    if len(hits) != 1:
        mismatches.append({"summands": len(hits)})
    parent = sim_sl if family is ModuleFamily.SL else sim_sp
    tail = Weight.of(charge)
    for shift in _box_shifts(lower.rank, window):
        head = lower + shift
        exponent = head.concat(tail)
        found = (
            parent(head, lower),
            parent(exponent, upper),
            len(hits) == 1 and hits[0].contains(exponent),
        )
        if len(set(found)) > 1:
            mismatches.append({"exponent": str(exponent), "lower": found[0], "upper": found[1], "summand": found[2]})
    return mismatches


def limit_coherence(
    mu: WeightSeq, n: int, family: ModuleFamily = ModuleFamily.SL, window: Optional[int] = None,
) -> bool:
    """X(mu^n) is exactly one summand of X(mu^(n+1)) and agrees with its charge slice on a window"""
    mismatches = coherence_window(family, mu.truncate(n), mu.truncate(n + 1), window)
    if mismatches:
        logger.warning("{} at rank {}: {} coherence mismatches", mu, n, len(mismatches))
    return not mismatches
