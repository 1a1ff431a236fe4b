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
A-signalizer functors.

A functor assigns to every nonidentity actor `a` an actor-invariant `r'`-subgroup `θ(a)` of `C_G(a)`, subject to
balance: `θ(a) ∩ C_G(b) ≤ θ(b)`. Values are stored once per cyclic subgroup of the actors, so `θ(a) = θ(a^k)`
holds by construction.
"""
from dataclasses import dataclass
from functools import cached_property
import logging
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from sympy.combinatorics import Permutation

from pclose import const
from pclose.closures.action import Coordinates, CoprimeAction
from pclose.closures.fixed import fixed_points, fixed_points_within
from pclose.compat.pydantic import pyd
from pclose.dto import BaseDto
from pclose.errors import ConstructionError, DegreeMismatchError, NotContainedError, PreconditionError
from pclose.perm.group import PermGroup
from pclose.perm.permutation import format_cycles
from pclose.perm.subgroups import normalizes
from pclose.structure.composition import composition_factors, is_kgroup

LOGGER = logging.getLogger(__name__)

Lift = Callable[[PermGroup], PermGroup]


class SignalizerFunctor:
    """
    Values of a functor keyed by the canonical generator of each cyclic subgroup of the actors.

    `centralizing` lists the keys whose value is known to be the whole `C_G(a)`; fixed points inside those
    values are then computed as fixed points of the acted-on group.
    """

    def __init__(
        self,
        action: CoprimeAction,
        values: Mapping[Sequence[int], PermGroup],
        *,
        centralizing: Iterable[Sequence[int]] = (),
    ) -> None:
        self.action = action
        frame = action.frame
        normalized: dict[Coordinates, PermGroup] = {}
        for coords, value in values.items():
            if len(coords) != frame.rank or not any(c % action.prime for c in coords):
                raise ConstructionError(f"{tuple(coords)} is not a nonidentity actor of rank {frame.rank}")
            if value.degree != action.group.degree:
                raise DegreeMismatchError(f"Functor value of degree {value.degree} in degree {action.group.degree}")
            key = frame.normalize(coords)
            if key in normalized and normalized[key] != value:
                raise ConstructionError(f"Conflicting values for the cyclic subgroup of {frame.format_word(key)}")
            normalized[key] = value
        self.representatives: tuple[Coordinates, ...] = tuple(frame.cyclic_representatives())
        missing = [frame.format_word(c) for c in self.representatives if c not in normalized]
        if missing:
            raise ConstructionError(f"No functor value for {', '.join(missing)}")
        self._values = normalized
        self.centralizing: frozenset[Coordinates] = frozenset(frame.normalize(c) for c in centralizing)

    @property
    def prime(self) -> int:
        return self.action.prime

    def key(self, a: Permutation | Sequence[int]) -> Coordinates:
        """
        The canonical key of a nonidentity actor given as a permutation or as coordinates.

        :raise NotContainedError: if `a` is not an actor or is the identity.
        """
        coords = self.action.frame.coords(a) if isinstance(a, Permutation) else tuple(a)
        if not any(c % self.prime for c in coords):
            raise NotContainedError("The identity has no functor value")
        return self.action.frame.normalize(coords)

    def value(self, a: Permutation | Sequence[int]) -> PermGroup:
        return self._values[self.key(a)]

    def items(self) -> Iterator[tuple[Coordinates, PermGroup]]:
        for coords in self.representatives:
            yield coords, self._values[coords]

    def word(self, coords: Sequence[int]) -> str:
        return self.action.frame.format_word(coords)

    def element(self, coords: Sequence[int]) -> Permutation:
        return self.action.frame.element(coords)

    def fixed_in_value(self, coords: Coordinates, sub: PermGroup) -> PermGroup:
        """`C_{θ(a)}(S)` for a subgroup `S` of the actors."""
        value = self._values[coords]
        if sub.is_trivial or value.is_trivial:
            return value
        if coords in self.centralizing:
            return fixed_points(self.action, sub.join(self.element(coords)))
        return fixed_points_within(self.action, value, sub)

    @cached_property
    def report(self) -> "FunctorReport":
        return functor_verify(self)

    @property
    def verified(self) -> bool:
        """`True` when the functor passes every axiom check; computed once."""
        return self.report.passed

    def require_verified(self, operation: str) -> None:
        """:raise PreconditionError: if the functor fails verification."""
        if not self.verified:
            violation = self.report.violations[0]
            raise PreconditionError(f"{operation} needs a signalizer functor: {violation.describe(self)}")

    def __repr__(self) -> str:
        orders = ", ".join(f"{self.word(c)}: {v.order}" for c, v in self.items())
        return f"SignalizerFunctor({orders})"


@dataclass(frozen=True)
class FunctorViolation:
    """The first failing check for a value, or for a pair of values under balance."""

    kind: const.ViolationKind
    a: Coordinates
    b: Coordinates | None = None
    witness: Permutation | None = None

    def describe(self, functor: SignalizerFunctor) -> str:
        subject = f"theta({functor.word(self.a)})"
        match self.kind:
            case const.ViolationKind.Containment:
                text = f"{subject} is not contained in C_G({functor.word(self.a)})"
            case const.ViolationKind.Invariance:
                text = f"{subject} is not invariant under the actors"
            case const.ViolationKind.Order:
                text = f"{subject} has order divisible by {functor.prime}"
            case _:
                b = functor.word(self.b) if self.b is not None else "?"
                text = f"{subject} ∩ C_G({b}) is not contained in theta({b})"
        if self.witness is not None:
            text += f", witness {format_cycles(self.witness)}"
        return text


class FunctorViolationDto(BaseDto):
    kind: const.ViolationKind
    a: str
    b: str | None = None
    witness: str | None = None
    description: str


class FunctorReportDto(BaseDto):
    """JSON form of a verification report."""

    passed: bool
    size: int
    violations: list[FunctorViolationDto] = pyd.Field(default_factory=list)


@dataclass(frozen=True)
class FunctorReport:
    functor: SignalizerFunctor
    violations: tuple[FunctorViolation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def of_kind(self, kind: const.ViolationKind) -> list[FunctorViolation]:
        return [v for v in self.violations if v.kind == kind]

    def to_dto(self) -> FunctorReportDto:
        f = self.functor
        return FunctorReportDto(
            passed=self.passed,
            size=functor_size(f),
            violations=[
                FunctorViolationDto(
                    kind=v.kind,
                    a=f.word(v.a),
                    b=f.word(v.b) if v.b is not None else None,
                    witness=format_cycles(v.witness) if v.witness is not None else None,
                    description=v.describe(f),
                )
                for v in self.violations
            ],
        )


def _first_outside(elements: Iterable[Permutation], group: PermGroup) -> Permutation | None:
    return next((g for g in elements if not group.contains(g)), None)


def _value_violation(functor: SignalizerFunctor, coords: Coordinates, value: PermGroup) -> FunctorViolation | None:
    group = functor.action.group
    a = functor.element(coords)
    for g in value.generators:
        if not group.contains(g) or g * a != a * g:
            return FunctorViolation(const.ViolationKind.Containment, coords, witness=g)
    conjugates = (~t * g * t for t in functor.action.actors.generators for g in value.generators)
    moved = _first_outside(conjugates, value)
    if moved is not None:
        return FunctorViolation(const.ViolationKind.Invariance, coords, witness=moved)
    if value.order % functor.prime == 0:
        return FunctorViolation(const.ViolationKind.Order, coords)
    return None


def functor_verify(functor: SignalizerFunctor) -> FunctorReport:
    """
    Check containment in `C_G(a)`, invariance under the actors, `r'`-order and pairwise balance.

    Failures are returned as data: at most one violation per value and one per ordered pair.
    """
    violations: list[FunctorViolation] = []
    degree = functor.action.actors.degree
    for coords, value in functor.items():
        found = _value_violation(functor, coords, value)
        if found is not None:
            violations.append(found)
    for a, _ in functor.items():
        for b, target in functor.items():
            if a == b:
                continue
            meet = functor.fixed_in_value(a, PermGroup(degree, [functor.element(b)]))
            outside = _first_outside(meet.generators, target)
            if outside is not None:
                violations.append(FunctorViolation(const.ViolationKind.Balance, a, b, outside))
    if violations:
        LOGGER.info("Functor fails %d checks, first: %s", len(violations), violations[0].describe(functor))
    else:
        LOGGER.debug("Functor with %d values passes verification", len(functor.representatives))
    return FunctorReport(functor, tuple(violations))


def full_centralizer_functor(action: CoprimeAction) -> SignalizerFunctor:
    """`θ(a) = C_G(a)`."""
    frame = action.frame
    values = {
        c: fixed_points(action, PermGroup(frame.degree, [frame.element(c)])) for c in frame.cyclic_representatives()
    }
    return SignalizerFunctor(action, values, centralizing=values.keys())


def trivial_functor(action: CoprimeAction) -> SignalizerFunctor:
    """`θ ≡ 1`."""
    trivial = PermGroup.trivial(action.group.degree)
    return SignalizerFunctor(action, {c: trivial for c in action.frame.cyclic_representatives()})


def theta_of_actors(functor: SignalizerFunctor) -> PermGroup:
    """
    `θ(A) = C_{θ(a)}(A)`, independent of `a` by balance.

    :raise PreconditionError: if there are no nonidentity actors.
    """
    if not functor.representatives:
        raise PreconditionError("A functor on trivial actors has no values")
    return functor.fixed_in_value(functor.representatives[0], functor.action.actors)


def functor_size(functor: SignalizerFunctor) -> int:
    """`Σ |θ(a)|` over all nonidentity actors `a`."""
    return (functor.prime - 1) * sum(value.order for _, value in functor.items())


def is_theta_subgroup(functor: SignalizerFunctor, sub: PermGroup) -> bool:
    """An actor-invariant `r'`-subgroup `X` of `G` with `C_X(a) ≤ θ(a)` for every nonidentity actor `a`."""
    action = functor.action
    if not sub.is_subgroup_of(action.group) or not action.is_invariant(sub) or sub.order % functor.prime == 0:
        return False
    return all(
        fixed_points_within(action, sub, functor.element(c)).is_subgroup_of(value) for c, value in functor.items()
    )


def split_value(action: CoprimeAction, value: PermGroup) -> list[tuple[PermGroup, Lift]]:
    """
    Factor-level pieces of a subgroup of a structured power with the maps embedding them back, or the subgroup
    itself when it is not a product of coordinate subgroups.
    """
    structure = action.structure
    if structure is not None and value.is_subgroup_of(action.group):
        parts = structure.coordinate_parts(value)
        if parts is not None:
            return [
                (part, lambda k, i=i: structure.coordinate_group(i, k))
                for i, part in enumerate(parts)
                if not part.is_trivial
            ]
    return [(value, lambda k: k)]


def require_kgroup_values(functor: SignalizerFunctor, operation: str) -> None:
    """:raise PreconditionError: if some value has a composition factor outside the recognition table."""
    checked: list[PermGroup] = []
    for coords, value in functor.items():
        for part, _ in split_value(functor.action, value):
            if any(part == seen for seen in checked):
                continue
            if not is_kgroup(composition_factors(part)):
                raise PreconditionError(f"{operation} needs K-group values, theta({functor.word(coords)}) is not")
            checked.append(part)


def normalizes_values(sub: PermGroup, functor: SignalizerFunctor) -> bool:
    return all(normalizes(sub, value) for _, value in functor.items())


def require_rank(functor: SignalizerFunctor, rank: int, operation: str) -> None:
    """:raise PreconditionError: if the actors have smaller rank."""
    if functor.action.rank < rank:
        raise PreconditionError(f"{operation} needs actors of rank at least {rank}, got {functor.action.rank}")
