from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, Iterator, Tuple

from limweight.weights import Weight

from .lie_type import Family


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation of finite support: e_i -> s_i * e_{pi(i)}

    ``images`` lists (i, pi(i), s_i) for every index that is moved or negated.
    """

    images: Tuple[Tuple[int, int, int], ...] = ()

    def __post_init__(self):
        images = tuple(sorted((i, t, s) for i, t, s in self.images if (i, t, s) != (i, i, 1)))
        sources = [i for i, _, _ in images]
        targets = [t for _, t, _ in images]
        if sorted(sources) != sorted(targets) or len(set(sources)) != len(sources):
            raise ValueError("images must permute a finite set of indices")
        if any(s not in (1, -1) for _, _, s in images):
            raise ValueError("signs are +1 or -1")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls) -> "WeylElement":
        return cls()

    @classmethod
    def transposition(cls, i: int, j: int) -> "WeylElement":
        return cls(((i, j, 1), (j, i, 1)))

    @classmethod
    def sign_change(cls, *indices: int) -> "WeylElement":
        return cls(tuple((i, i, -1) for i in indices))

    @classmethod
    def from_permutation(cls, targets, signs=()) -> "WeylElement":
        """``targets[k-1]`` is pi(k); ``signs`` lists the negated sources"""
        negated = set(signs)
        return cls(tuple((k, t, -1 if k in negated else 1) for k, t in enumerate(targets, 1)))

    @property
    def _table(self) -> Dict[int, Tuple[int, int]]:
        return {i: (t, s) for i, t, s in self.images}

    def apply(self, i: int) -> Tuple[int, int]:
        return self._table.get(i, (i, 1))

    @property
    def sign_changes(self) -> frozenset:
        return frozenset(i for i, _, s in self.images if s < 0)

    @property
    def is_even(self) -> bool:
        """Even number of sign changes, the type D condition"""
        return len(self.sign_changes) % 2 == 0

    @property
    def is_permutation(self) -> bool:
        return not self.sign_changes

    @property
    def support(self) -> frozenset:
        return frozenset(i for i, _, _ in self.images)

    def allowed_in(self, family: Family) -> bool:
        if family is Family.A:
            return self.is_permutation
        if family is Family.D:
            return self.is_even
        return True

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        """Composition: (self @ other)(x) = self(other(x))"""
        images = []
        for i in self.support | other.support:
            middle, s_other = other.apply(i)
            target, s_self = self.apply(middle)
            images.append((i, target, s_other * s_self))
        return WeylElement(tuple(images))

    def inverse(self) -> "WeylElement":
        return WeylElement(tuple((t, i, s) for i, t, s in self.images))

    def act(self, weight: Weight) -> Weight:
        entries = list(weight.entries)
        for i, t, s in self.images:
            entries[t - 1] = weight.entry(i).scale(s)
        return Weight(tuple(entries))

    def __str__(self) -> str:
        if not self.images:
            return "id"
        return " ".join(f"{i}->{'-' if s < 0 else ''}{t}" for i, t, s in self.images)


def dot_action(w: WeylElement, weight: Weight, rho: Weight) -> Weight:
    """w . weight = w(weight + rho) - rho"""
    return w.act(weight + rho) - rho


def weyl_group(family: Family, size: int) -> Iterator[WeylElement]:
    """All elements of the Weyl group acting on the indices 1..size"""
    indices = range(1, size + 1)
    for perm in permutations(indices):
        if family is Family.A:
            yield WeylElement.from_permutation(perm)
            continue
        for count in range(size + 1):
            if family is Family.D and count % 2:
                continue
            for negated in combinations(indices, count):
                yield WeylElement.from_permutation(perm, negated)
