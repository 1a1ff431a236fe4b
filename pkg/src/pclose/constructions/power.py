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
"""
Direct powers `J^m` with actors permuting coordinates, acting by a fixed automorphism, or both.

The power structure remembers the factor so fixed points and invariant closures can be computed factor by
factor instead of in the full power.
"""
from dataclasses import dataclass
from functools import lru_cache
import logging
from typing import Callable, Sequence

from sympy.combinatorics import Permutation

from pclose import const
from pclose.closures.action import CoprimeAction, GroupAction
from pclose.errors import ConstructionError, ResourceLimitError
from pclose.perm.group import PermGroup
from pclose.perm.oracle import within_oracle_bound
from pclose.perm.permutation import identity, perm_key, shift
from pclose.perm.subgroups import centralizer
from pclose.properties.property import Property
from pclose.structure.layer import is_simple

LOGGER = logging.getLogger(__name__)

InvariantClosure = Callable[[GroupAction, Property], PermGroup]


@dataclass(frozen=True)
class PowerStructure:
    """`J^m` with the `i`-th factor on the points `i·n .. (i+1)·n - 1`, `n` the degree of `J`."""

    factor: PermGroup
    copies: int

    @property
    def factor_degree(self) -> int:
        return self.factor.degree

    @property
    def degree(self) -> int:
        return self.factor.degree * self.copies

    @classmethod
    def from_power(cls, group: PermGroup, copies: int) -> "PowerStructure":
        """
        Recover the structure of a group given as a direct power on consecutive blocks of points.

        :raise ConstructionError: if the group is not the direct power of its first coordinate projection.
        """
        if copies < 1 or group.degree % copies:
            raise ConstructionError(f"Degree {group.degree} does not split into {copies} blocks")
        n = group.degree // copies
        factor = PermGroup(n, [_project(g, 0, n) for g in group.generators])
        structure = cls(factor, copies)
        if group.order != factor.order**copies or not structure.power().is_subgroup_of(group):
            raise ConstructionError(f"Group of order {group.order} is not a direct power of {copies} blocks")
        return structure

    def embed(self, i: int, p: Permutation) -> Permutation:
        return shift(p, i * self.factor_degree, self.degree)

    def project(self, i: int, p: Permutation) -> Permutation:
        """The action of a block-preserving `p` on the `i`-th coordinate, as a factor-level permutation."""
        return _project(p, i * self.factor_degree, self.factor_degree)

    def coordinate_parts(self, sub: PermGroup) -> list[PermGroup] | None:
        """
        The factor-level projections of a subgroup of `J^m` when it is their direct product, else `None`.
        """
        parts = [
            PermGroup(self.factor_degree, [self.project(i, g) for g in sub.generators]) for i in range(self.copies)
        ]
        size = 1
        for part in parts:
            size *= part.order
        return parts if size == sub.order else None

    def coordinate_group(self, i: int, sub: PermGroup | None = None) -> PermGroup:
        source = self.factor if sub is None else sub
        return PermGroup(self.degree, [self.embed(i, g) for g in source.generators])

    def power(self) -> PermGroup:
        return PermGroup(self.degree, [self.embed(i, g) for i in range(self.copies) for g in self.factor.generators])

    def induced(self, s: Permutation) -> tuple[list[int], list[Permutation]]:
        """The coordinate permutation of `s` and the factor-level maps it applies on each coordinate."""
        n = self.factor_degree
        array = s.array_form
        targets = [array[i * n] // n for i in range(self.copies)]
        maps = [Permutation([array[i * n + x] - targets[i] * n for x in range(n)]) for i in range(self.copies)]
        return targets, maps

    def _transports(
        self, induced: Sequence[tuple[list[int], list[Permutation]]]
    ) -> list[tuple[list[int], dict[int, Permutation], list[Permutation]]]:
        """
        Per coordinate orbit: the orbit, the transport from its first coordinate to each member, and the
        factor-level maps fixing the first coordinate that a fixed element must commute with.
        """
        visited: dict[int, Permutation] = {}
        result = []
        for start in range(self.copies):
            if start in visited:
                continue
            transport = {start: identity(self.factor_degree)}
            visited[start] = transport[start]
            orbit = [start]
            loops: list[Permutation] = []
            for i in orbit:
                for targets, maps in induced:
                    j = targets[i]
                    tau = transport[i] * maps[i]
                    if j not in transport:
                        transport[j] = tau
                        visited[j] = tau
                        orbit.append(j)
                    else:
                        loop = tau * ~transport[j]
                        if not loop.is_Identity:
                            loops.append(loop)
            result.append((orbit, transport, loops))
        return result

    def fixed_points(self, actors: Sequence[Permutation]) -> PermGroup:
        """
        `C_{J^m}(S)` for actors `S` preserving the coordinate blocks.

        On each coordinate orbit a fixed element is determined by its first coordinate, which must
        centralize the maps returning that coordinate to itself.
        """
        induced = [self.induced(s) for s in actors]
        gens = []
        for orbit, transport, loops in self._transports(induced):
            fixed = _factor_centralizer(self.factor, tuple(perm_key(x) for x in loops)) if loops else self.factor
            for h in fixed.generators:
                element = identity(self.degree)
                for i in orbit:
                    element = element * self.embed(i, ~transport[i] * h * transport[i])
                gens.append(element)
        return PermGroup(self.degree, gens)

    def o_p_invariant(self, action: GroupAction, prop: Property, closure: InvariantClosure) -> PermGroup:
        """
        `O_P(J^m;A)` split over the coordinate orbits of the actors.

        On an orbit whose kernel acts on every factor by non-inner automorphisms of a nonabelian simple `J`,
        the closure is the product of the factor-level closures under the kernel. Other orbits are computed
        on their own product, which must fit the oracle bound.

        :raise ResourceLimitError: if a factor-level or orbit-level computation exceeds the oracle bound.
        """
        elements = [action.frame.element(c) for c in action.frame.nonidentity()]
        induced_all = [(a, self.induced(a)) for a in elements]
        simple_factor = not self.factor.is_abelian and is_simple(self.factor)
        result = PermGroup.trivial(self.degree)
        for orbit, _, _ in self._transports([self.induced(g) for g in action.actors.generators]):
            kernel = [ind for a, ind in induced_all if all(ind[0][i] == i for i in orbit)]
            parts = self._factor_closures(orbit, kernel, prop, action.prime, closure) if simple_factor else None
            if parts is None:
                product = PermGroup(self.degree, [g for i in orbit for g in self.coordinate_group(i).generators])
                if not within_oracle_bound(product):
                    raise ResourceLimitError(
                        f"Coordinate orbit of size {len(orbit)} gives a product of order {product.order} "
                        "beyond the oracle bound"
                    )
                parts = [closure(action.restrict(product), prop)]
            result = result.join(*parts)
        return result

    def _factor_closures(
        self,
        orbit: Sequence[int],
        kernel: Sequence[tuple[list[int], list[Permutation]]],
        prop: Property,
        prime: int,
        closure: InvariantClosure,
    ) -> list[PermGroup] | None:
        parts = []
        for i in orbit:
            maps = PermGroup(self.factor_degree, [ind[1][i] for ind in kernel])
            if maps.is_trivial:
                return None
            try:
                factor_action = CoprimeAction.from_parts(self.factor, maps, prime)
            except ConstructionError:
                LOGGER.debug("Kernel maps on coordinate %d are not a coprime complement", i)
                return None
            parts.append(self.coordinate_group(i, closure(factor_action, prop)))
        return parts


def _coordinate_shift(structure: PowerStructure) -> Permutation:
    n, m = structure.factor_degree, structure.copies
    return Permutation([((i + 1) % m) * n + x for i in range(m) for x in range(n)])


def _diagonal(structure: PowerStructure, automorphism: Permutation) -> Permutation:
    result = identity(structure.degree)
    for i in range(structure.copies):
        result = result * structure.embed(i, automorphism)
    return result


def build_power_action(
    factor: PermGroup,
    pattern: const.PowerPattern | str,
    *,
    prime: int,
    automorphism: Permutation | None = None,
    copies: int | None = None,
) -> CoprimeAction:
    """
    Build `G = J^m` inside a wrapper with actors of exponent `prime`.

    - `regular_wreath`: `C_r` cycling `r` coordinates (`copies` may be 1 for trivial actors).
    - `diagonal`: `⟨φ⟩` acting by `φ` on every coordinate.
    - `coordinatewise`: `C_r^m`, the `i`-th generator acting by `φ` on the `i`-th coordinate.
    - `mixed`: `C_r × C_r`, the cycling of `r` coordinates together with the diagonal `φ`.

    :raise ConstructionError: if the actors are not coprime to `J` or the parameters do not fit the pattern.
    """
    pattern = const.PowerPattern(pattern)
    if pattern in (const.PowerPattern.RegularWreath, const.PowerPattern.Mixed):
        m = prime if copies is None else copies
        if m not in (1, prime) or (pattern == const.PowerPattern.Mixed and m != prime):
            raise ConstructionError(f"Pattern {pattern} cycles exactly {prime} coordinates, got {m}")
    else:
        m = 1 if copies is None else copies
    if m < 1:
        raise ConstructionError("A power needs at least one copy")
    if automorphism is not None and automorphism.size != factor.degree:
        raise ConstructionError("The automorphism must act on the points of the factor")
    if pattern == const.PowerPattern.Mixed and automorphism is None:
        raise ConstructionError("The mixed pattern needs an automorphism")
    structure = PowerStructure(factor, m)
    actors: list[Permutation] = []
    if pattern in (const.PowerPattern.RegularWreath, const.PowerPattern.Mixed):
        actors.append(_coordinate_shift(structure))
    if automorphism is not None and pattern in (const.PowerPattern.Diagonal, const.PowerPattern.Mixed):
        actors.append(_diagonal(structure, automorphism))
    if automorphism is not None and pattern == const.PowerPattern.Coordinatewise:
        actors.extend(structure.embed(i, automorphism) for i in range(m))
    action = CoprimeAction.from_parts(
        structure.power(), PermGroup(structure.degree, actors), prime, structure=structure
    )
    LOGGER.debug("Built %s power of degree %d with %d actors", pattern, structure.degree, action.actors.order)
    return action


def _project(p: Permutation, offset: int, size: int) -> Permutation:
    images = [p.array_form[offset + x] - offset for x in range(size)]
    if sorted(images) != list(range(size)):
        raise ConstructionError(f"Permutation does not preserve the block of points starting at {offset + 1}")
    return Permutation(images)


@lru_cache(maxsize=256)
def _factor_centralizer(factor: PermGroup, loops: tuple[tuple[int, ...], ...]) -> PermGroup:
    return centralizer(factor, PermGroup(factor.degree, [Permutation(list(key)) for key in loops]))
