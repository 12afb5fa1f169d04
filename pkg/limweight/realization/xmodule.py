"""
Monomial models of X_sl(mu) and X_sp(mu).

A basis monomial x^lambda of X(mu) has lambda in the lattice coset of mu with
the same nonnegative-integer index set; monomials whose nonnegative-integer
set strictly grows span the submodule that is factored out.
"""
from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from limweight.core.config import settings
from limweight.core.config.constants import DEFAULT_NILPOTENCY_MARGIN, ERROR_MESSAGES
from limweight.core.exceptions import NotInBasis
from limweight.rootdata import BorelDescriptor, Root
from limweight.weights import HALF, Weight, int_plus

from .algebra import AlgebraKind, Generator, MatrixLieAlgebra
from .coefficients import Coeff, format_coeff
from .operators import Combination


class ModuleFamily(str, Enum):
    SL = "sl"
    SP = "sp"


class BasisStatus(str, Enum):
    IN_BASIS = "InBasis"
    IN_V_PLUS = "InVPlus"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class Monomial:
    exponent: Weight

    @property
    def rank(self) -> int:
        return self.exponent.rank

    def sort_key(self):
        return self.exponent.sort_key()

    def __str__(self) -> str:
        return f"x^{self.exponent}"


@dataclass(frozen=True)
class Term:
    coeff: Coeff
    mono: Monomial

    def to_pair(self) -> Tuple[str, List[str]]:
        return format_coeff(self.coeff), [str(x) for x in self.mono.exponent]

    def __str__(self) -> str:
        return f"{format_coeff(self.coeff)}*{self.mono}"


def _terms(combo: Combination) -> List[Term]:
    terms = [Term(c, Monomial(w)) for w, c in combo.items()]
    return sorted(terms, key=lambda t: t.mono.sort_key())


@dataclass(frozen=True)
class XModule:
    family: ModuleFamily
    mu: Weight

    def __post_init__(self):
        object.__setattr__(self, "family", ModuleFamily(self.family))
        if self.family is ModuleFamily.SL and self.mu.rank < 2:
            raise ValueError("X_sl needs a weight of rank at least 2")

    @classmethod
    def sl(cls, mu: Weight) -> "XModule":
        return cls(ModuleFamily.SL, mu)

    @classmethod
    def sp(cls, mu: Weight) -> "XModule":
        return cls(ModuleFamily.SP, mu)

    @property
    def rank(self) -> int:
        return self.mu.rank - 1 if self.family is ModuleFamily.SL else self.mu.rank

    @property
    def algebra(self) -> MatrixLieAlgebra:
        kind = AlgebraKind.GL if self.family is ModuleFamily.SL else AlgebraKind.SP
        return MatrixLieAlgebra(kind, self.rank)

    def in_coset(self, exponent: Weight) -> bool:
        if exponent.rank != self.mu.rank:
            return False
        total = 0
        for a, b in zip(exponent, self.mu):
            d = a.difference(b)
            if d is None or d.denominator != 1:
                return False
            total += int(d)
        if self.family is ModuleFamily.SL:
            return total == 0
        return total % 2 == 0

    def status(self, m: Monomial) -> BasisStatus:
        if not self.in_coset(m.exponent):
            return BasisStatus.OUTSIDE
        mine, theirs = int_plus(self.mu), int_plus(m.exponent)
        if theirs == mine:
            return BasisStatus.IN_BASIS
        if theirs > mine:
            return BasisStatus.IN_V_PLUS
        return BasisStatus.OUTSIDE

    def in_basis(self, m: Monomial) -> bool:
        return self.status(m) is BasisStatus.IN_BASIS

    def weight_of(self, m: Monomial) -> Weight:
        return weight_of(m, self.family)

    def positive_roots(self, borel: BorelDescriptor) -> List[Root]:
        return sorted(borel.positive_roots(self.algebra.lie_type), key=Root.sort_key)

    def __str__(self) -> str:
        return f"X_{self.family.value}{self.mu}"


# Realized actions


def act_sl(n: int, i: int, j: int, m: Monomial) -> Optional[Term]:
    """e_ij acting as x_i d_j on x^mu"""
    if i == j or not (1 <= i <= n + 1 and 1 <= j <= n + 1):
        raise ValueError(f"e_{i}{j} is not a root vector of sl({n + 1})")
    terms = _terms(MatrixLieAlgebra.gl(n).realize(Root.e_diff(i, j)).apply(m.exponent))
    return terms[0] if terms else None


def act_sp(n: int, alpha: Generator, m: Monomial) -> List[Term]:
    return _terms(MatrixLieAlgebra.sp(n).realize(alpha).apply(m.exponent))


def act(module: XModule, label: Generator, m: Monomial) -> List[Term]:
    """Action on the monomial space before passing to the quotient"""
    return _terms(module.algebra.realize(label).apply(m.exponent))


def weight_of(m: Monomial, family: ModuleFamily) -> Weight:
    if ModuleFamily(family) is ModuleFamily.SL:
        return m.exponent
    return m.exponent + (HALF,) * m.rank


def xmodule_act(module: XModule, label: Generator, m: Monomial) -> List[Term]:
    status = module.status(m)
    if status is not BasisStatus.IN_BASIS:
        raise NotInBasis(f"{m} in {module}: {ERROR_MESSAGES['NOT_IN_BASIS']} ({status.value})")
    kept = []
    for term in act(module, label, m):
        target = module.status(term.mono)
        if target is BasisStatus.IN_BASIS:
            kept.append(term)
        elif target is BasisStatus.OUTSIDE:
            raise NotInBasis(f"{label} sends {m} outside {module}")
    return kept


# Windows


def _taxicab(size: int, radius: int) -> Iterator[Tuple[int, ...]]:
    if size == 0:
        yield ()
        return
    for head in range(-radius, radius + 1):
        for rest in _taxicab(size - 1, radius - abs(head)):
            yield (head,) + rest


def basis_window(module: XModule, radius: Optional[int] = None, seed: Optional[Weight] = None) -> List[Monomial]:
    """Basis monomials within taxicab distance ``radius`` of ``seed`` (default mu)"""
    radius = settings.WINDOW_RADIUS if radius is None else radius
    seed = module.mu if seed is None else seed
    found = []
    for shift in _taxicab(seed.rank, radius):
        m = Monomial(seed + shift)
        if module.in_basis(m):
            found.append(m)
    found.sort(key=Monomial.sort_key)
    logger.debug("{}: {} basis monomials within radius {}", module, len(found), radius)
    return found


# Highest weight vectors


def singular_monomials(module: XModule, borel: BorelDescriptor, window: Iterable[Monomial]) -> List[Monomial]:
    """Window monomials killed by every positive root vector in the quotient"""
    positive = module.positive_roots(borel)
    found = [
        m for m in window
        if module.in_basis(m) and all(not xmodule_act(module, alpha, m) for alpha in positive)
    ]
    return sorted(found, key=Monomial.sort_key)


def singular_by_closed_form(module: XModule, borel: BorelDescriptor, m: Monomial) -> bool:
    """lambda_j = 0 or lambda_i = -1 for every positive root e_i - e_j"""
    if module.family is not ModuleFamily.SL:
        raise ValueError("the closed form applies to X_sl")
    lam = m.exponent
    for alpha in module.positive_roots(borel):
        i, j = alpha.support if alpha.coefficient(alpha.support[0]) == 1 else alpha.support[::-1]
        if not (lam.entry(j).is_zero or lam.entry(i).difference(-1) == 0):
            return False
    return True


# Reachability


def reachability_graph(module: XModule, nodes: Sequence[Monomial]) -> Dict[Monomial, Tuple[Monomial, ...]]:
    """m -> m' whenever some root vector sends m to a nonzero multiple of m'"""
    inside = set(nodes)
    graph = {}
    for m in nodes:
        targets = set()
        for alpha in module.algebra.root_generators():
            for term in xmodule_act(module, alpha, m):
                if term.mono in inside:
                    targets.add(term.mono)
        graph[m] = tuple(sorted(targets, key=Monomial.sort_key))
    return graph


def _reached(graph: Dict[Monomial, Tuple[Monomial, ...]], start: Monomial) -> set:
    seen, queue = {start}, deque([start])
    while queue:
        for nxt in graph[queue.popleft()]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def is_strongly_connected(module: XModule, radius: Optional[int] = None,
                          seed: Optional[Weight] = None, margin: int = 2) -> bool:
    """Every pair of window monomials is joined both ways by paths inside the window plus a margin"""
    radius = settings.WINDOW_RADIUS if radius is None else radius
    window = basis_window(module, radius, seed)
    if not window:
        return True
    graph = reachability_graph(module, basis_window(module, radius + margin, seed))
    reverse: Dict[Monomial, list] = {m: [] for m in graph}
    for m, targets in graph.items():
        for t in targets:
            reverse[t].append(m)
    forward = _reached(graph, window[0])
    backward = _reached({m: tuple(v) for m, v in reverse.items()}, window[0])
    return all(m in forward and m in backward for m in window)


def string_terminates(module: XModule, alpha: Root, m: Monomial, steps: Optional[int] = None) -> bool:
    """Whether repeated action of a root vector on m vanishes within ``steps`` applications"""
    if steps is None:
        sizes = [abs(x.value) for x in m.exponent if x.is_integer]
        steps = int(max(sizes, default=0)) + 1 + DEFAULT_NILPOTENCY_MARGIN
    current = [Term(Fraction(1), m)]
    for _ in range(steps):
        nxt = []
        for term in current:
            nxt.extend(xmodule_act(module, alpha, term.mono))
        if not nxt:
            return True
        current = nxt
    return False
