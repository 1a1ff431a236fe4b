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
"""`P`-components and the `P`-layer."""
from dataclasses import dataclass
import logging

from pclose.compat.pydantic import pyd
from pclose.dto import BaseDto, GroupDto
from pclose.errors import InternalConsistencyError
from pclose.perm.group import PermGroup
from pclose.perm.quotient import quotient
from pclose.perm.subgroups import is_subnormal, sorted_groups
from pclose.properties.closure import o_p, o_upper_p
from pclose.properties.property import CLOSURE_AXIOMS, Property
from pclose.structure.layer import components, is_quasisimple, join_all

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class PComponentSet:
    """The `P`-components (or `(A,P)`-components) of a group and the subgroup they generate."""

    ambient: PermGroup
    prop: Property
    members: tuple[PermGroup, ...]

    @property
    def layer(self) -> PermGroup:
        return join_all(self.members, self.ambient.degree)

    def __len__(self) -> int:
        return len(self.members)

    def containing(self, sub: PermGroup) -> list[PermGroup]:
        return [k for k in self.members if sub.is_subgroup_of(k)]

    def to_dto(self) -> "PComponentSetDto":
        return PComponentSetDto(
            property=self.prop.name,
            ambient=GroupDto.from_group(self.ambient),
            members=[GroupDto.from_group(k) for k in self.members],
            layer=GroupDto.from_group(self.layer),
        )


class PComponentSetDto(BaseDto):
    """JSON form of a component set."""

    property: str
    ambient: GroupDto
    members: list[GroupDto] = pyd.Field(default_factory=list)
    layer: GroupDto


def stable_residual(group: PermGroup, prop: Property) -> PermGroup:
    """Iterate `K ← O^P(K)` from `group` until it stabilizes."""
    current = group
    while True:
        nxt = o_upper_p(current, prop)
        if nxt.order == current.order:
            return current
        current = nxt


def is_p_quasisimple(group: PermGroup, prop: Property) -> bool:
    """`True` when `group / O_P(group)` is quasisimple."""
    radical = o_p(group, prop)
    if radical.order == group.order:
        return False
    if radical.is_trivial:
        return is_quasisimple(group)
    target, _ = quotient(group, radical)
    return is_quasisimple(target)


def is_p_component(group: PermGroup, sub: PermGroup, prop: Property) -> bool:
    """
    Decide directly whether `sub` is a `P`-component of `group`: subnormal, equal to its own `O^P` and
    quasisimple modulo its `O_P`.
    """
    if sub.is_trivial or not is_subnormal(group, sub):
        return False
    if o_upper_p(sub, prop).order != sub.order:
        return False
    return is_p_quasisimple(sub, prop)


def comp_p(group: PermGroup, prop: Property) -> PComponentSet:
    """
    Compute the `P`-components of `group`.

    Each component `C` of `G/O_P(G)` is lifted to its full preimage, reduced by iterating `O^P` and the
    result is checked against the definition.

    :raise PreconditionError: if the property does not declare the closure axioms.
    :raise InternalConsistencyError: if a lifted subgroup fails the definition.
    """
    prop.require(CLOSURE_AXIOMS, "comp_p")
    radical = o_p(group, prop)
    if radical.order == group.order:
        return PComponentSet(group, prop, ())
    target, hom = quotient(group, radical)
    found = []
    for comp in components(target):
        candidate = stable_residual(hom.preimage(comp), prop)
        if not is_p_component(group, candidate, prop):
            raise InternalConsistencyError(
                f"Lift of a component of order {comp.order} is not a {prop.name}-component "
                f"(order {candidate.order})"
            )
        found.append(candidate)
    LOGGER.debug("Found %d %s-components in a group of order %d", len(found), prop.name, group.order)
    return PComponentSet(group, prop, tuple(sorted_groups(found)))


def p_layer(group: PermGroup, prop: Property) -> PermGroup:
    """`L_P(group)`, the subgroup generated by the `P`-components."""
    return comp_p(group, prop).layer
