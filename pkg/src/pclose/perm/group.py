#
#  Copyright 2024 by C Change Labs Inc. www.c-change-labs.com
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#
from functools import cached_property
import logging
from typing import Iterable, Iterator, Self, Sequence

from sympy.combinatorics import Permutation, PermutationGroup

from pclose.errors import ConstructionError, DegreeMismatchError
from pclose.perm.permutation import format_cycles, identity, perm_key
from pclose.utils import random_index

LOGGER = logging.getLogger(__name__)


class PermGroup:
    """
    A permutation group on the points `0..degree-1`, immutable after construction.

    The base and strong generating set are computed lazily by sympy's deterministic Schreier-Sims.
    Equality is semantic: two groups are equal when they have the same degree, the same order and one
    contains the generators of the other.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = ()) -> None:
        if degree < 1:
            raise ConstructionError("Group degree must be positive.")
        gens: list[Permutation] = []
        seen: set[tuple[int, ...]] = set()
        for g in generators:
            if not isinstance(g, Permutation):
                raise ConstructionError(f"Not a permutation: {g!r}")
            if g.size != degree:
                raise DegreeMismatchError(f"Generator of degree {g.size} in a group of degree {degree}")
            key = perm_key(g)
            if g.is_Identity or key in seen:
                continue
            seen.add(key)
            gens.append(g)
        self._degree = degree
        self._generators: tuple[Permutation, ...] = tuple(gens)
        self._group = PermutationGroup(list(gens) if gens else [identity(degree)])

    @classmethod
    def trivial(cls, degree: int) -> Self:
        """Return the trivial group of the given degree."""
        return cls(degree, ())

    @classmethod
    def from_sympy(cls, group: PermutationGroup, degree: int) -> Self:
        """
        Wrap a sympy permutation group as a group of the given degree.

        sympy represents a group without generators as a group of degree 1, so the degree is explicit.
        """
        return cls(degree, [g for g in group.generators if not g.is_Identity])

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple[Permutation, ...]:
        """Non-identity generators, duplicates removed, in input order."""
        return self._generators

    @property
    def sympy_group(self) -> PermutationGroup:
        return self._group

    @cached_property
    def order(self) -> int:
        """Group order, the product of the basic orbit lengths."""
        if not self._generators:
            return 1
        return int(self._group.order())

    @property
    def is_trivial(self) -> bool:
        return not self._generators

    @property
    def identity(self) -> Permutation:
        return identity(self._degree)

    @property
    def base(self) -> tuple[int, ...]:
        if not self._generators:
            return ()
        return tuple(self._group.base)

    @property
    def strong_generators(self) -> tuple[Permutation, ...]:
        if not self._generators:
            return ()
        return tuple(self._group.strong_gens)

    @property
    def basic_orbits(self) -> tuple[tuple[int, ...], ...]:
        if not self._generators:
            return ()
        return tuple(tuple(orbit) for orbit in self._group.basic_orbits)

    @property
    def basic_transversals(self) -> list[dict[int, Permutation]]:
        """For each base point, a map from orbit point to an element carrying the base point there."""
        if not self._generators:
            return []
        return self._group.basic_transversals

    def contains(self, g: Permutation) -> bool:
        """Membership test by sifting through the stabilizer chain."""
        if g.size != self._degree:
            return False
        if g.is_Identity:
            return True
        if not self._generators:
            return False
        return bool(self._group.contains(g, strict=True))

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        """Return `True` when every generator of this group lies in `other`."""
        if self._degree != other.degree:
            return False
        if other.order % self.order != 0:
            return False
        return all(other.contains(g) for g in self._generators)

    def __le__(self, other: "PermGroup") -> bool:
        return self.is_subgroup_of(other)

    def __lt__(self, other: "PermGroup") -> bool:
        return self.order < other.order and self.is_subgroup_of(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self._degree == other.degree and self.order == other.order and self.is_subgroup_of(other)

    def __hash__(self) -> int:
        return hash((self._degree, self.order))

    def __repr__(self) -> str:
        return f"PermGroup(degree={self._degree}, order={self.order})"

    def elements(self) -> Iterator[Permutation]:
        """Enumerate all elements. Only sensible for small groups."""
        if not self._generators:
            yield self.identity
            return
        yield from self._group.generate(af=False)

    def random_element(self) -> Permutation:
        """Return a random element drawn with the seeded generator."""
        if not self._generators:
            return self.identity
        result = self.identity
        for transversal in reversed(self.basic_transversals):
            values = list(transversal.values())
            result = result * values[random_index(len(values))]
        return result

    def orbit(self, point: int) -> frozenset[int]:
        if not self._generators:
            return frozenset((point,))
        return frozenset(self._group.orbit(point))

    def orbits(self) -> list[tuple[int, ...]]:
        """All orbits, including fixed points, each sorted, ordered by least point."""
        result: list[tuple[int, ...]] = []
        seen: set[int] = set()
        for point in range(self._degree):
            if point in seen:
                continue
            orbit = tuple(sorted(self.orbit(point)))
            seen.update(orbit)
            result.append(orbit)
        return result

    def stabilizer(self, point: int) -> "PermGroup":
        if not self._generators:
            return self
        return PermGroup.from_sympy(self._group.stabilizer(point), self._degree)

    def conjugate(self, g: Permutation) -> "PermGroup":
        """Return `self^g`."""
        if g.size != self._degree:
            raise DegreeMismatchError(f"Cannot conjugate a group of degree {self._degree} by degree {g.size}")
        return PermGroup(self._degree, [~g * x * g for x in self._generators])

    def join(self, *others: "PermGroup | Permutation") -> "PermGroup":
        """Return the subgroup generated by this group and the given groups or elements."""
        gens = list(self._generators)
        for other in others:
            if isinstance(other, PermGroup):
                if other.degree != self._degree:
                    raise DegreeMismatchError(f"Cannot join degrees {self._degree} and {other.degree}")
                gens.extend(other.generators)
            else:
                gens.append(other)
        return PermGroup(self._degree, gens)

    @cached_property
    def is_abelian(self) -> bool:
        gens = self._generators
        return all(gens[i] * gens[j] == gens[j] * gens[i] for i in range(len(gens)) for j in range(i + 1, len(gens)))

    @cached_property
    def is_solvable(self) -> bool:
        if not self._generators:
            return True
        return bool(self._group.is_solvable)

    @cached_property
    def is_nilpotent(self) -> bool:
        if not self._generators:
            return True
        return bool(self._group.is_nilpotent)

    def sylow_subgroup(self, p: int) -> "PermGroup":
        """Return a Sylow `p`-subgroup; the trivial group when `p` does not divide the order."""
        if self.order % p != 0:
            return PermGroup.trivial(self._degree)
        return PermGroup.from_sympy(self._group.sylow_subgroup(p), self._degree)

    def cycle_generators(self) -> list[str]:
        """Generators in 1-based cycle notation."""
        return [format_cycles(g) for g in self._generators]


def build_group(degree: int, generators: Sequence[Permutation]) -> PermGroup:
    """
    Build a permutation group of the given degree.

    :raise DegreeMismatchError: if a generator has a different degree.
    """
    group = PermGroup(degree, generators)
    LOGGER.debug("Built group of degree %d with %d generators", degree, len(group.generators))
    return group
