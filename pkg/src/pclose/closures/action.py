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
"""Group actions realized inside an explicit wrapper group `W = G ⋊ A`."""
from functools import cached_property
import itertools
import logging
import math
import re
from typing import TYPE_CHECKING, Iterator, Self, Sequence

from sympy.combinatorics import Permutation

from pclose.errors import ConstructionError, NotContainedError, NotInvariantError, NotNormalError
from pclose.perm.group import PermGroup
from pclose.perm.permutation import perm_key
from pclose.perm.subgroups import normalizes
from pclose.utils import is_prime

if TYPE_CHECKING:
    from pclose.constructions.power import PowerStructure

LOGGER = logging.getLogger(__name__)

Coordinates = tuple[int, ...]

_WORD_FACTOR = re.compile(r"^e(\d+)(?:\^(\d+))?$")


class ActorFrame:
    """
    Coordinates on an elementary abelian `r`-group of actors.

    A basis is extracted from the actor generators in order. Cyclic subgroups are represented by the
    coordinate vector whose first nonzero entry is 1, ordered by the number of nonzero entries and then so
    that `e1, e2, ...` come first.
    """

    def __init__(self, actors: PermGroup, prime: int) -> None:
        self.prime = prime
        self.degree = actors.degree
        basis: list[Permutation] = []
        span = PermGroup.trivial(actors.degree)
        for g in actors.generators:
            if not span.contains(g):
                basis.append(g)
                span = span.join(g)
        self.basis: tuple[Permutation, ...] = tuple(basis)
        self._by_key: dict[tuple[int, ...], Coordinates] = {}
        for coords in itertools.product(range(prime), repeat=self.rank):
            self._by_key[perm_key(self.element(coords))] = coords

    @property
    def rank(self) -> int:
        return len(self.basis)

    def element(self, coords: Sequence[int]) -> Permutation:
        result = Permutation(self.degree - 1)
        for g, c in zip(self.basis, coords):
            result = result * g ** (c % self.prime)
        return result

    def coords(self, a: Permutation) -> Coordinates:
        """
        Coordinates of an actor element.

        :raise NotContainedError: if `a` is not an actor.
        """
        try:
            return self._by_key[perm_key(a)]
        except KeyError:
            raise NotContainedError("Element is not among the actors") from None

    def cyclic_representatives(self) -> list[Coordinates]:
        """One generator for each nontrivial cyclic subgroup, in canonical order."""
        reps = [c for c in self._by_key.values() if any(c) and c[_first_nonzero(c)] == 1]
        return sorted(reps, key=lambda c: (sum(1 for x in c if x), tuple(-x for x in c)))

    def normalize(self, coords: Sequence[int]) -> Coordinates:
        """The representative of the cyclic subgroup generated by `coords`."""
        lead = coords[_first_nonzero(coords)]
        inverse = pow(lead, -1, self.prime)
        return tuple((x * inverse) % self.prime for x in coords)

    def nonidentity(self) -> Iterator[Coordinates]:
        for coords in self._by_key.values():
            if any(coords):
                yield coords

    def hyperplane_functionals(self) -> list[Coordinates]:
        """Functionals whose kernels are the hyperplanes; empty below rank 2."""
        if self.rank < 2:
            return []
        return self.cyclic_representatives()

    def hyperplane(self, functional: Sequence[int]) -> PermGroup:
        """The kernel of a nonzero functional, a subgroup of index `r`."""
        kernel = [
            self.element(c)
            for c in self._by_key.values()
            if sum(f * x for f, x in zip(functional, c)) % self.prime == 0
        ]
        return PermGroup(self.degree, kernel)

    def hyperplanes(self) -> list[PermGroup]:
        return [self.hyperplane(f) for f in self.hyperplane_functionals()]

    def format_word(self, coords: Sequence[int]) -> str:
        """Render coordinates as a word in the basis, e.g. `e1*e3^2`; the identity is `1`."""
        parts = []
        for i, c in enumerate(coords):
            if c == 1:
                parts.append(f"e{i + 1}")
            elif c:
                parts.append(f"e{i + 1}^{c}")
        return "*".join(parts) if parts else "1"

    def parse_word(self, word: str) -> Coordinates:
        """
        Parse a word in the basis.

        :raise ConstructionError: if the word is malformed or names a missing basis element.
        """
        coords = [0] * self.rank
        text = word.strip()
        if text == "1":
            return tuple(coords)
        for factor in text.split("*"):
            match = _WORD_FACTOR.match(factor.strip())
            if match is None:
                raise ConstructionError(f"Malformed actor word: {word!r}")
            index = int(match.group(1)) - 1
            if not 0 <= index < self.rank:
                raise ConstructionError(f"Actor word {word!r} names e{index + 1}, rank is {self.rank}")
            coords[index] = (coords[index] + int(match.group(2) or 1)) % self.prime
        return tuple(coords)


def _first_nonzero(coords: Sequence[int]) -> int:
    return next(i for i, x in enumerate(coords) if x)


class GroupAction:
    """
    An elementary abelian `r`-group of actors acting on a group by conjugation inside a wrapper.

    The wrapper must be the semidirect product: `group` normal in `wrapper`, `actors` a complement.
    Coprimality is not required; see `CoprimeAction`.
    """

    def __init__(
        self,
        wrapper: PermGroup,
        group: PermGroup,
        actors: PermGroup,
        prime: int,
        *,
        structure: "PowerStructure | None" = None,
    ) -> None:
        self.wrapper = wrapper
        self.group = group
        self.actors = actors
        self.prime = prime
        self.structure = structure
        self._validate()

    def _validate(self) -> None:
        if not is_prime(self.prime):
            raise ConstructionError(f"Actor exponent {self.prime} is not a prime")
        if self.group.degree != self.wrapper.degree or self.actors.degree != self.wrapper.degree:
            raise ConstructionError("Wrapper, group and actors must have the same degree")
        if not self.group.is_subgroup_of(self.wrapper) or not self.actors.is_subgroup_of(self.wrapper):
            raise ConstructionError("Group and actors must lie in the wrapper")
        if not normalizes(self.wrapper, self.group):
            raise NotNormalError("The group is not normal in the wrapper")
        if not self.actors.is_abelian or any(not (g**self.prime).is_Identity for g in self.actors.generators):
            raise ConstructionError(f"Actors are not an elementary abelian {self.prime}-group")
        if self.wrapper.order != self.group.order * self.actors.order:
            raise ConstructionError("Actors are not a complement of the group in the wrapper")

    @classmethod
    def from_parts(
        cls, group: PermGroup, actors: PermGroup, prime: int, *, structure: "PowerStructure | None" = None
    ) -> Self:
        """Build the action with wrapper `group · actors`."""
        return cls(group.join(actors), group, actors, prime, structure=structure)

    @cached_property
    def frame(self) -> ActorFrame:
        return ActorFrame(self.actors, self.prime)

    @property
    def rank(self) -> int:
        return self.frame.rank

    @property
    def is_coprime(self) -> bool:
        return math.gcd(self.actors.order, self.group.order) == 1

    def is_invariant(self, sub: PermGroup) -> bool:
        """`True` when `sub` is normalized by every actor."""
        return normalizes(self.actors, sub)

    def require_invariant(self, sub: PermGroup, name: str = "subgroup") -> None:
        """:raise NotInvariantError: if `sub` is not invariant under the actors."""
        if not self.is_invariant(sub):
            raise NotInvariantError(f"The {name} {sub!r} is not invariant under the actors")

    def require_actor_subgroup(self, sub: PermGroup) -> None:
        """:raise NotContainedError: if `sub` is not a subgroup of the actors."""
        if sub.degree != self.actors.degree or not sub.is_subgroup_of(self.actors):
            raise NotContainedError(f"{sub!r} is not a subgroup of the actors")

    def restrict(self, sub: PermGroup) -> Self:
        """
        The action of the same actors on an invariant subgroup.

        :raise NotInvariantError: if `sub` is not invariant.
        """
        self.require_invariant(sub)
        if sub.order == self.group.order:
            return self
        return type(self).from_parts(sub, self.actors, self.prime)

    def with_actors(self, sub: PermGroup) -> Self:
        """
        The action of a subgroup of the actors on the same group.

        :raise NotContainedError: if `sub` is not a subgroup of the actors.
        """
        self.require_actor_subgroup(sub)
        return type(self).from_parts(self.group, sub, self.prime, structure=self.structure)

    def actor(self, coords: Sequence[int]) -> Permutation:
        return self.frame.element(coords)

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}(degree={self.wrapper.degree}, group_order={self.group.order}, "
            f"actors_order={self.actors.order}, prime={self.prime})"
        )


class CoprimeAction(GroupAction):
    """A group action whose actor order is coprime to the group order."""

    def _validate(self) -> None:
        super()._validate()
        if not self.is_coprime:
            raise ConstructionError(
                f"Actors of order {self.actors.order} do not act coprimely on a group of order {self.group.order}"
            )
