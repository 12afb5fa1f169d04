"""
gl(n+1) and sp(2n) as explicit matrix algebras together with their
realizations by Weyl-algebra operators.

Brackets are computed from the matrices and decomposed back into the
generator basis, so comparing them against operator commutators checks the
realization independently.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple, Union

import sympy
from limweight.rootdata import Family, LieType, Root, roots, sorted_roots

from .operators import WeylOperator


@dataclass(frozen=True)
class Coroot:
    """The diagonal Cartan generator at index i (E_ii for gl, E_ii - E_{n+i,n+i} for sp)"""

    index: int

    def sort_key(self):
        return ((self.index, 0),)

    def __str__(self) -> str:
        return f"h{self.index}"


Generator = Union[Root, Coroot]


class AlgebraKind(str, Enum):
    GL = "gl"
    SP = "sp"


@dataclass(frozen=True)
class MatrixLieAlgebra:
    """gl(n+1) when kind is GL, sp(2n) when kind is SP"""

    kind: AlgebraKind
    n: int

    def __post_init__(self):
        object.__setattr__(self, "kind", AlgebraKind(self.kind))
        if self.n < 1:
            raise ValueError("rank must be positive")

    @classmethod
    def gl(cls, n: int) -> "MatrixLieAlgebra":
        return cls(AlgebraKind.GL, n)

    @classmethod
    def sp(cls, n: int) -> "MatrixLieAlgebra":
        return cls(AlgebraKind.SP, n)

    @property
    def lie_type(self) -> LieType:
        return LieType(Family.A if self.kind is AlgebraKind.GL else Family.C, self.n)

    @property
    def variables(self) -> int:
        """Number of Weyl-algebra variables x_1..x_N"""
        return self.lie_type.index_count

    @property
    def matrix_size(self) -> int:
        return self.n + 1 if self.kind is AlgebraKind.GL else 2 * self.n

    def root_generators(self) -> List[Root]:
        return sorted_roots(roots(self.lie_type))

    def generators(self) -> List[Generator]:
        return self.root_generators() + [Coroot(i) for i in range(1, self.variables + 1)]

    # Matrices

    def _positions(self, label: Generator) -> List[Tuple[int, int, int]]:
        """1-based (row, column, value) entries; the first one reads the coefficient back"""
        n = self.n
        if isinstance(label, Coroot):
            i = label.index
            if self.kind is AlgebraKind.GL:
                return [(i, i, 1)]
            return [(i, i, 1), (n + i, n + i, -1)]
        kind, support = label.kind, label.support
        if self.kind is AlgebraKind.GL:
            if kind != "EiMinusEj":
                raise ValueError(f"{label} is not a root of gl({n + 1})")
            i, j = (support if label.coefficient(support[0]) == 1 else support[::-1])
            return [(i, j, 1)]
        if kind == "EiMinusEj":
            i, j = (support if label.coefficient(support[0]) == 1 else support[::-1])
            return [(i, j, 1), (n + j, n + i, -1)]
        if kind == "EiPlusEj":
            i, j = support
            return [(i, n + j, 1), (j, n + i, 1)]
        if kind == "TwoEi":
            (i,) = support
            return [(i, n + i, 1)]
        if kind == "MinusEiMinusEj":
            i, j = support
            return [(n + i, j, 1), (n + j, i, 1)]
        if kind == "MinusTwoEi":
            (i,) = support
            return [(n + i, i, 1)]
        raise ValueError(f"{label} is not a root of sp({2 * n})")

    def matrix(self, label: Generator) -> sympy.ImmutableMatrix:
        m = sympy.zeros(self.matrix_size, self.matrix_size)
        for r, c, value in self._positions(label):
            m[r - 1, c - 1] = value
        return sympy.ImmutableMatrix(m)

    def decompose(self, m: sympy.MatrixBase) -> Dict[Generator, Fraction]:
        """Coordinates of a matrix in the generator basis"""
        found: Dict[Generator, Fraction] = {}
        residual = sympy.Matrix(m)
        for label in self.generators():
            r, c, value = self._positions(label)[0]
            coeff = sympy.Rational(m[r - 1, c - 1]) / value
            if coeff != 0:
                found[label] = Fraction(int(coeff.p), int(coeff.q))
                residual -= coeff * self.matrix(label)
        if any(x != 0 for x in residual):
            raise ValueError(f"matrix does not lie in {self}")
        return found

    def bracket(self, x: Generator, y: Generator) -> Dict[Generator, Fraction]:
        return _bracket(self, x, y)

    # Realization

    def realize(self, label: Generator) -> WeylOperator:
        return _realize(self, label)

    def __str__(self) -> str:
        if self.kind is AlgebraKind.GL:
            return f"gl({self.n + 1})"
        return f"sp({2 * self.n})"


@lru_cache(maxsize=None)
def _bracket(algebra: MatrixLieAlgebra, x: Generator, y: Generator) -> Dict[Generator, Fraction]:
    a, b = algebra.matrix(x), algebra.matrix(y)
    return algebra.decompose(a * b - b * a)


@lru_cache(maxsize=None)
def _realize(algebra: MatrixLieAlgebra, label: Generator) -> WeylOperator:
    size = algebra.variables
    op = WeylOperator.monomial
    if isinstance(label, Coroot):
        i = label.index
        number = op(size, 1, x={i: 1}, d={i: 1})
        if algebra.kind is AlgebraKind.SP:
            return number + op(size, Fraction(1, 2))
        return number
    kind, support = label.kind, label.support
    if kind == "EiMinusEj":
        i, j = (support if label.coefficient(support[0]) == 1 else support[::-1])
        return op(size, 1, x={i: 1}, d={j: 1})
    if algebra.kind is AlgebraKind.SP:
        if kind == "EiPlusEj":
            i, j = support
            return op(size, 1, x={i: 1, j: 1})
        if kind == "TwoEi":
            (i,) = support
            return op(size, Fraction(1, 2), x={i: 2})
        if kind == "MinusEiMinusEj":
            i, j = support
            return op(size, -1, d={i: 1, j: 1})
        if kind == "MinusTwoEi":
            (i,) = support
            return op(size, Fraction(-1, 2), d={i: 2})
    raise ValueError(f"{label} is not a generator of {algebra}")

