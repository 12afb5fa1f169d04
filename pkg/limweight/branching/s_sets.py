"""
The sets S(mu) and S(mu)[k] behind the gl(n)-decomposition of X_sl(mu).

S(mu) is computed from its definition: k belongs to S(mu) when some integer
nu of size k keeps Int+ of mu_bar + nu and of mu_{n+1} - k unchanged.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from limweight.core.config import settings
from limweight.weights import ExtScalar, Weight

Box = Union[int, Tuple[int, int]]


def resolve_box(box: Optional[Box]) -> Tuple[int, int]:
    if box is None:
        box = settings.K_BOX
    if isinstance(box, int):
        return -box, box
    low, high = box
    return int(low), int(high)


def _bounds(x: ExtScalar) -> Tuple[Optional[int], Optional[int]]:
    """Allowed integer shifts t of x keeping the Int+ membership of x + t"""
    if x.is_nonneg_integer:
        return -x.as_int(), None
    if x.is_neg_integer:
        return None, -1 - x.as_int()
    return None, None


def _k_bounds(last: ExtScalar) -> Tuple[Optional[int], Optional[int]]:
    """Allowed k with last - k in the Int+ class of last"""
    if last.is_nonneg_integer:
        return None, last.as_int()
    if last.is_neg_integer:
        return last.as_int() + 1, None
    return None, None


def _size_range(head: Weight) -> Tuple[Optional[int], Optional[int]]:
    lows, highs = zip(*(_bounds(x) for x in head))
    low = None if any(v is None for v in lows) else sum(lows)
    high = None if any(v is None for v in highs) else sum(highs)
    return low, high


def _meet(a: Tuple[Optional[int], Optional[int]], b: Tuple[Optional[int], Optional[int]]):
    lows = [v for v in (a[0], b[0]) if v is not None]
    highs = [v for v in (a[1], b[1]) if v is not None]
    return (max(lows) if lows else None), (min(highs) if highs else None)


@dataclass(frozen=True)
class SSetReport:
    members: Tuple[int, ...]
    shape: str
    low: Optional[int] = None
    high: Optional[int] = None

    def __str__(self) -> str:
        if self.shape == "empty":
            return "{}"
        low = "-inf" if self.low is None else str(self.low)
        high = "inf" if self.high is None else str(self.high)
        return f"[{low}, {high}]"


def s_set_range(mu: Weight) -> Tuple[Optional[int], Optional[int], bool]:
    """(low, high, empty) describing S(mu) exactly; None marks an infinite end"""
    low, high = _meet(_size_range(mu.head(mu.rank - 1)), _k_bounds(mu.entry(mu.rank)))
    empty = low is not None and high is not None and low > high
    return low, high, empty


def s_set(mu: Weight, k_box: Optional[Box] = None) -> SSetReport:
    low, high, empty = s_set_range(mu)
    if empty:
        return SSetReport((), "empty", low, high)
    box_low, box_high = resolve_box(k_box)
    start = box_low if low is None else max(low, box_low)
    stop = box_high if high is None else min(high, box_high)
    members = tuple(range(start, stop + 1))
    if low is None and high is None:
        shape = "all"
    elif low is None:
        shape = "left-ray"
    elif high is None:
        shape = "right-ray"
    else:
        shape = "interval"
    return SSetReport(members, shape, low, high)


def s_set_member(mu: Weight, k: int) -> Optional[Weight]:
    """Canonical element of S(mu)[k]: load k greedily onto the first indices that allow it"""
    low, high, empty = s_set_range(mu)
    if empty or (low is not None and k < low) or (high is not None and k > high):
        return None
    head = mu.head(mu.rank - 1)
    nu = [0] * head.rank
    remaining = k
    for index, x in enumerate(head):
        if remaining == 0:
            break
        lo, hi = _bounds(x)
        if remaining > 0:
            take = remaining if hi is None else min(remaining, max(hi, 0))
        else:
            take = remaining if lo is None else max(remaining, min(lo, 0))
        nu[index] = take
        remaining -= take
    if remaining:
        return None
    return Weight.from_values(nu)


def _literal_last_condition(last: ExtScalar, k: int) -> bool:
    """-k e_{n+1} ~_D mu_{n+1} e_{n+1}: integral difference and the same Int class"""
    if not last.is_integer:
        return False
    return ExtScalar.coerce(-k).int_class() == last.int_class()


def lemma_s_set_disagreements(mu: Weight, k_box: Optional[Box] = None) -> List[int]:
    """k where the criterion as literally stated and the definition of S(mu) differ"""
    low, high = _size_range(mu.head(mu.rank - 1))
    definition = set(s_set(mu, k_box).members)
    box_low, box_high = resolve_box(k_box)
    found = []
    for k in range(box_low, box_high + 1):
        size_ok = (low is None or k >= low) and (high is None or k <= high)
        literal = size_ok and _literal_last_condition(mu.entry(mu.rank), k)
        if literal != (k in definition):
            found.append(k)
    return found
