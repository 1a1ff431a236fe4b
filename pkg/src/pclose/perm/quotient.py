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
Homomorphisms between permutation groups and faithful permutation representations of quotients.

Both directions of a homomorphism `φ` are computed through its graph `{(g, φ(g))}`, itself a permutation
group on the disjoint union of both point sets: sifting a target element through a stabilizer chain whose
base starts with target points yields a preimage, and symmetrically for images.
"""
from functools import cached_property
import logging
from typing import Callable, Protocol, Sequence

from sympy.combinatorics import Permutation, PermutationGroup

from pclose.errors import (
    DegreeMismatchError,
    InternalConsistencyError,
    NotContainedError,
    NotNormalError,
    ResourceLimitError,
)
from pclose.perm.group import PermGroup
from pclose.perm.permutation import identity
from pclose.perm.subgroups import is_normal
from pclose.settings import get_settings

LOGGER = logging.getLogger(__name__)


def _orbit_transversal(point: int, generators: Sequence[Permutation], degree: int) -> dict[int, Permutation]:
    transversal = {point: identity(degree)}
    queue = [point]
    for current in queue:
        for s in generators:
            image = s.array_form[current]
            if image not in transversal:
                transversal[image] = transversal[current] * s
                queue.append(image)
    return transversal


def _part(p: Permutation, offset: int, size: int) -> Permutation:
    return Permutation([x - offset for x in p.array_form[offset : offset + size]])


class _GraphChain:
    """Stabilizer chain of the graph of a homomorphism, with the base starting on one side."""

    def __init__(
        self,
        source: PermGroup,
        target_degree: int,
        images: Sequence[Permutation],
        prefix_side: str,
        prefix: Sequence[int],
    ) -> None:
        n, d = source.degree, target_degree
        self._n, self._d = n, d
        self._offset = n if prefix_side == "target" else 0
        self._side_size = d if prefix_side == "target" else n
        self._levels: list[tuple[int, dict[int, Permutation]]] = []
        self.fixing_generators: list[Permutation] = []
        gens = [Permutation(g.array_form + [n + x for x in im.array_form]) for g, im in zip(source.generators, images)]
        gens = [g for g in gens if not g.is_Identity]
        if not gens:
            return
        base_prefix = [self._offset + b for b in prefix]
        base, strong = PermutationGroup(gens).schreier_sims_incremental(base=base_prefix)
        for i, beta in enumerate(base_prefix):
            level_gens = [s for s in strong if all(s.array_form[b] == b for b in base[:i])]
            self._levels.append((beta, _orbit_transversal(beta, level_gens, n + d)))
        self.fixing_generators = [
            s for s in strong if not s.is_Identity and all(s.array_form[b] == b for b in base_prefix)
        ]

    def sift(self, x: Permutation) -> Permutation | None:
        """Return a graph element whose prefix-side part is `x`, `None` when there is none."""
        h = x
        result = identity(self._n + self._d)
        for beta, transversal in self._levels:
            u = transversal.get(h.array_form[beta - self._offset] + self._offset)
            if u is None:
                return None
            h = h * ~_part(u, self._offset, self._side_size)
            result = u * result
        if not h.is_Identity:
            return None
        return result

    def source_part(self, p: Permutation) -> Permutation:
        return _part(p, 0, self._n)

    def target_part(self, p: Permutation) -> Permutation:
        return _part(p, self._n, self._d)


class Homomorphism:
    """
    A homomorphism given by the images of the source generators.

    An optional `image_map` evaluates images directly (used by quotient actions and projections); otherwise
    images are obtained by sifting through the graph of the homomorphism.
    """

    def __init__(
        self,
        source: PermGroup,
        target: PermGroup,
        generator_images: Sequence[Permutation],
        *,
        image_map: Callable[[Permutation], Permutation] | None = None,
        kernel: PermGroup | None = None,
    ) -> None:
        if len(generator_images) != len(source.generators):
            raise ValueError(
                f"Expected {len(source.generators)} generator images, got {len(generator_images)}"
            )
        for im in generator_images:
            if im.size != target.degree:
                raise DegreeMismatchError(f"Image of degree {im.size} for a target of degree {target.degree}")
        self.source = source
        self.target = target
        self.generator_images: tuple[Permutation, ...] = tuple(generator_images)
        self._image_map = image_map
        self._kernel = kernel

    @classmethod
    def identity_map(cls, group: PermGroup) -> "Homomorphism":
        return cls(group, group, group.generators, image_map=lambda g: g, kernel=PermGroup.trivial(group.degree))

    @cached_property
    def _lift_chain(self) -> _GraphChain:
        return _GraphChain(self.source, self.target.degree, self.generator_images, "target", self.target.base)

    @cached_property
    def _image_chain(self) -> _GraphChain:
        return _GraphChain(self.source, self.target.degree, self.generator_images, "source", self.source.base)

    def image(self, g: Permutation) -> Permutation:
        """Return `φ(g)`."""
        if g.size != self.source.degree:
            raise DegreeMismatchError(f"Element of degree {g.size} for a source of degree {self.source.degree}")
        if self._image_map is not None:
            return self._image_map(g)
        graph_element = self._image_chain.sift(g)
        if graph_element is None:
            raise NotContainedError("Element is not in the source group")
        return self._image_chain.target_part(graph_element)

    def image_group(self, sub: PermGroup) -> PermGroup:
        """Return `φ(sub)`."""
        return PermGroup(self.target.degree, [self.image(g) for g in sub.generators])

    def lift(self, q: Permutation) -> Permutation:
        """Return some `g` with `φ(g) = q`."""
        if q.size != self.target.degree:
            raise DegreeMismatchError(f"Element of degree {q.size} for a target of degree {self.target.degree}")
        graph_element = self._lift_chain.sift(q)
        if graph_element is None:
            raise NotContainedError("Element is not in the image of the homomorphism")
        return self._lift_chain.source_part(graph_element)

    @property
    def kernel(self) -> PermGroup:
        if self._kernel is None:
            chain = self._lift_chain
            self._kernel = PermGroup(self.source.degree, [chain.source_part(s) for s in chain.fixing_generators])
        return self._kernel

    def preimage(self, sub: PermGroup) -> PermGroup:
        """Return the full preimage of `sub`, which must lie in the target."""
        return self.kernel.join(*[self.lift(q) for q in sub.generators])

    def is_well_defined(self) -> bool:
        """Exact test that the generator images define a homomorphism: the graph meets `1 × target` trivially."""
        return not self._image_chain.fixing_generators

    def check_random_pairs(self, count: int = 100) -> bool:
        """Test `φ(xy) = φ(x)φ(y)` on seeded random pairs of source elements."""
        for _ in range(count):
            x = self.source.random_element()
            y = self.source.random_element()
            if self.image(x * y) != self.image(x) * self.image(y):
                return False
        return True


class _ActionPart(Protocol):
    degree: int

    def act(self, g: Permutation) -> list[int]: ...


class _OrbitPart:
    """Restriction to a union of points fixed by the kernel."""

    def __init__(self, points: Sequence[int]) -> None:
        self.points = tuple(points)
        self.degree = len(self.points)
        self._index = {p: i for i, p in enumerate(self.points)}

    def act(self, g: Permutation) -> list[int]:
        array = g.array_form
        return [self._index[array[p]] for p in self.points]


class _CosetPart:
    """Action on the right cosets of a subgroup, cosets named by a canonical representative."""

    def __init__(self, group: PermGroup, sub: PermGroup, cap: int) -> None:
        self._levels = list(zip(sub.base, sub.basic_transversals))
        start = self._canonical(group.identity)
        self._reps: list[Permutation] = [start]
        self._index: dict[tuple[int, ...], int] = {tuple(start.array_form): 0}
        for t in self._reps:
            for g in group.generators:
                c = self._canonical(t * g)
                key = tuple(c.array_form)
                if key not in self._index:
                    if len(self._reps) >= cap:
                        raise ResourceLimitError(f"Coset enumeration exceeded the degree cap {cap}")
                    self._index[key] = len(self._reps)
                    self._reps.append(c)
        self.degree = len(self._reps)

    def _canonical(self, h: Permutation) -> Permutation:
        for _, transversal in self._levels:
            array = h.array_form
            best = min(transversal, key=lambda p: array[p])
            h = transversal[best] * h
        return h

    def act(self, g: Permutation) -> list[int]:
        return [self._index[tuple(self._canonical(t * g).array_form)] for t in self._reps]


class _QuotientAction:
    def __init__(self, parts: Sequence[_ActionPart]) -> None:
        self.parts = list(parts)
        self.degree = sum(p.degree for p in self.parts)

    def act(self, g: Permutation) -> Permutation:
        array: list[int] = []
        for part in self.parts:
            offset = len(array)
            array.extend(offset + x for x in part.act(g))
        return Permutation(array)


def _faithful_action(group: PermGroup, normal: PermGroup, index: int, cap: int) -> _QuotientAction:
    candidates: list[tuple[int, int, PermGroup | None, tuple[int, ...]]] = []
    for orbit in group.orbits():
        if len(orbit) == 1:
            continue
        if all(g.array_form[p] == p for g in normal.generators for p in orbit):
            candidates.append((len(orbit), orbit[0], None, orbit))
            continue
        over = normal.join(group.stabilizer(orbit[0]))
        degree = group.order // over.order
        if 1 < degree <= cap:
            candidates.append((degree, orbit[0], over, orbit))
    candidates.sort(key=lambda c: (c[0], c[1]))
    chosen: list[_ActionPart] = []
    total = 0
    for degree, _, over, orbit in candidates:
        if total + degree > cap:
            continue
        chosen.append(_OrbitPart(orbit) if over is None else _CosetPart(group, over, cap))
        total += degree
        action = _QuotientAction(chosen)
        image_order = PermGroup(action.degree, [action.act(g) for g in group.generators]).order
        if image_order == index:
            LOGGER.debug("Quotient of index %d represented on %d points by %d parts", index, total, len(chosen))
            return action
        if image_order > index:
            raise InternalConsistencyError("Quotient action has a kernel smaller than the normal subgroup")
    if index > cap:
        raise ResourceLimitError(f"Quotient of index {index} needs more than {cap} points")
    LOGGER.debug("Quotient of index %d represented on the cosets of the kernel", index)
    return _QuotientAction([_CosetPart(group, normal, cap)])


def quotient(group: PermGroup, normal: PermGroup, *, degree_cap: int | None = None) -> tuple[PermGroup, Homomorphism]:
    """
    Return a faithful permutation representation of `group / normal` and the projection onto it.

    Orbits on which `normal` acts trivially are used directly, other orbits contribute the action on the
    cosets of `normal·G_α`; parts are added by increasing degree until the action is faithful on the
    quotient. The action on the cosets of `normal` itself is the last resort.

    :raise NotNormalError: if `normal` is not a normal subgroup.
    :raise ResourceLimitError: if no representation fits under the degree cap.
    """
    if not is_normal(group, normal):
        raise NotNormalError(f"{normal!r} is not normal in {group!r}")
    cap = degree_cap if degree_cap is not None else get_settings().quotient_degree_cap
    if normal.is_trivial:
        return group, Homomorphism.identity_map(group)
    index = group.order // normal.order
    if index == 1:
        target = PermGroup.trivial(1)
        one = identity(1)
        return target, Homomorphism(
            group, target, [one] * len(group.generators), image_map=lambda g: one, kernel=group
        )
    action = _faithful_action(group, normal, index, cap)
    images = [action.act(g) for g in group.generators]
    target = PermGroup(action.degree, images)
    return target, Homomorphism(group, target, images, image_map=action.act, kernel=normal)
