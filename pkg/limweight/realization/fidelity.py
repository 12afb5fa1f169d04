from dataclasses import dataclass
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from limweight.weights import Weight

from .algebra import Generator, MatrixLieAlgebra
from .coefficients import format_coeff
from .operators import apply_to, combine


@dataclass(frozen=True)
class BracketFailure:
    x: Generator
    y: Generator
    exponent: Weight
    residual: Tuple[Tuple[str, str], ...]

    def __str__(self) -> str:
        return f"[{self.x},{self.y}] on x^{self.exponent}: residual {dict(self.residual)}"


def bracket_fidelity(
    algebra: MatrixLieAlgebra,
    exponents: Iterable[Weight],
    pairs: Optional[Sequence[Tuple[Generator, Generator]]] = None,
) -> List[BracketFailure]:
    """Compare [act(x), act(y)] with act([x, y]) on each monomial; empty when faithful"""
    if pairs is None:
        gens = algebra.generators()
        pairs = [(x, y) for x, y in product(gens, gens) if x != y]
    failures = []
    exponents = list(exponents)
    for x, y in pairs:
        bracket = algebra.bracket(x, y)
        ox, oy = algebra.realize(x), algebra.realize(y)
        for exponent in exponents:
            start = {exponent: 1}
            xy = apply_to(ox, apply_to(oy, start))
            yx = apply_to(oy, apply_to(ox, start))
            rhs = combine(*((c, apply_to(algebra.realize(z), start)) for z, c in bracket.items()))
            residual = combine((1, xy), (-1, yx), (-1, rhs))
            if residual:
                failures.append(BracketFailure(
                    x, y, exponent,
                    tuple(sorted((str(w), format_coeff(c)) for w, c in residual.items())),
                ))
    logger.debug("{}: {} bracket checks on {} monomials, {} failures",
                 algebra, len(pairs), len(exponents), len(failures))
    return failures
