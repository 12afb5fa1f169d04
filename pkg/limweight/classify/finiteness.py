from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional

from loguru import logger

from limweight.rootdata import Family, LieType, Root, RootPartition, partition_roots, roots, sorted_roots
from limweight.weights import Weight, int_sets


@lru_cache(maxsize=None)
def warn_outside_range(predicate: str, n: int, minimum: int):
    """Logged once per (predicate, rank)"""
    logger.warning("{} is established for rank above {}; evaluated at rank {}", predicate, minimum, n)


def _ordered_pair(root: Root):
    """(i, j) of the root e_i - e_j"""
    i, j = root.support
    return (i, j) if root.coefficient(i) == 1 else (j, i)


def locally_finite_roots_Xsl(mu: Weight, n: Optional[int] = None) -> RootPartition:
    """e_i - e_j acts locally finitely iff i is in Int-(mu) or j in Int+(mu)"""
    n = mu.rank - 1 if n is None else n
    _, plus, minus = int_sets(mu)
    lie_type = LieType(Family.A, n)
    fin = set()
    for alpha in roots(lie_type):
        i, j = _ordered_pair(alpha)
        if i in minus or j in plus:
            fin.add(alpha)
    return partition_roots(lie_type, fin)


def locally_finite_roots_Xsp(mu: Weight, n: Optional[int] = None) -> RootPartition:
    """+-e_i - e_j, -2e_j for j in Int+(mu) and e_k +- e_l, 2e_k for k in Int-(mu)"""
    n = mu.rank if n is None else n
    if n <= 3:
        warn_outside_range("locally_finite_roots_Xsp", n, 3)
    _, plus, minus = int_sets(mu)
    fin = set()
    for alpha in roots(LieType(Family.C, n)):
        vector = alpha.vector
        for index, c in vector.items():
            if index in plus and c < 0:
                fin.add(alpha)
            if index in minus and c > 0:
                fin.add(alpha)
    return partition_roots(LieType(Family.C, n), fin)


def is_cuspidal(partition: RootPartition) -> bool:
    return not partition.fin


def is_integrable(partition: RootPartition) -> bool:
    return not partition.inf


def is_finite_dim(partition: RootPartition) -> bool:
    """At finite rank a simple weight module is finite dimensional iff integrable"""
    return is_integrable(partition)


def is_finite_dim_Xsl(mu: Weight) -> bool:
    _, plus, minus = int_sets(mu)
    everything = frozenset(range(1, mu.rank + 1))
    return plus == everything or minus == everything


def root_closure_ok(partition: RootPartition) -> bool:
    """alpha, beta infinite with alpha + beta a root forces alpha + beta infinite"""
    everything = partition.all
    for alpha, beta in combinations(sorted_roots(partition.inf), 2):
        gamma = alpha.sum_root(beta)
        if gamma is not None and gamma in everything and gamma not in partition.inf:
            return False
    return True


def cone_of(inf: Iterable[Root]) -> List[Root]:
    """Generators left after removing every root that is a sum of two others"""
    found: FrozenSet[Root] = frozenset(inf)
    generators = []
    for gamma in sorted_roots(found):
        others = [r for r in found if r != gamma]
        if any(a.sum_root(b) == gamma for a, b in combinations(others, 2)):
            continue
        generators.append(gamma)
    return generators
