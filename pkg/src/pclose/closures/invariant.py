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
Invariant closures: `O_P(G;A)`, near `(A,P)`-groups, `O_nP(G;A)` and `O_nP(G)`.

Closures are joins over families enumerated from the element table of `G`, so they are only available
for groups within the oracle bound unless the action carries a power structure.
"""
from dataclasses import dataclass
import logging

from sympy.combinatorics import Permutation

from pclose import const
from pclose.closures.action import GroupAction
from pclose.closures.fixed import fixed_points, fixed_points_of
from pclose.errors import ResourceLimitError, TheoremViolationError
from pclose.perm.group import PermGroup
from pclose.perm.oracle import IDENTITY_MASK, ElementTable, element_table, within_oracle_bound
from pclose.perm.subgroups import centralizer
from pclose.properties.property import Axiom, Property

LOGGER = logging.getLogger(__name__)

INVARIANT_CLOSURE_AXIOMS = frozenset({Axiom.SubgroupClosed, Axiom.QuotientClosed, Axiom.ExtensionClosed})
NEAR_AXIOMS = INVARIANT_CLOSURE_AXIOMS | {Axiom.ContainsSolvable}


@dataclass(frozen=True)
class InvariantSubgroupFamily:
    """Subgroups of the acted-on group normalized by `stabilizing`, as element-table masks."""

    action: GroupAction
    stabilizing: PermGroup
    table: ElementTable
    masks: tuple[int, ...]

    @property
    def members(self) -> list[PermGroup]:
        return [self.table.subgroup(m) for m in self.masks]

    def __len__(self) -> int:
        return len(self.masks)

    def join(self) -> PermGroup:
        """The subgroup generated by all members."""
        return self.table.subgroup(self.table.join(IDENTITY_MASK, *self.masks))


def stabilizing_group(
    action: GroupAction, mode: const.StabilizerMode | str, a: Permutation | None = None
) -> PermGroup | None:
    """`A C_G(A)`, `A C_G(a)`, or `None` when no invariance is demanded."""
    mode = const.StabilizerMode(mode)
    if mode == const.StabilizerMode.NoFilter:
        return None
    if mode == const.StabilizerMode.ACGA:
        return action.actors.join(fixed_points(action))
    if a is None:
        raise ValueError("The ACGa stabilizer needs an actor element")
    return action.actors.join(fixed_points_of(action, a))


def enumerate_invariant_subgroups(
    action: GroupAction,
    mode: const.StabilizerMode | str = const.StabilizerMode.ACGA,
    prop: Property | None = None,
    *,
    a: Permutation | None = None,
) -> InvariantSubgroupFamily:
    """
    Enumerate the subgroups of `G` invariant under the stabilizing group of `mode`, optionally those
    satisfying `prop`.

    :raise ResourceLimitError: if `G` exceeds the oracle bound.
    """
    table = element_table(action.group)
    stabilizing = stabilizing_group(action, mode, a)
    maps = [] if stabilizing is None else [table.conjugation_map(w) for w in stabilizing.generators]
    masks = []
    for mask in table.all_subgroups():
        if maps and not table.is_invariant(mask, maps):
            continue
        if prop is not None and not prop.holds(table.subgroup(mask)):
            continue
        masks.append(mask)
    LOGGER.debug("Found %d invariant subgroups in a group of order %d", len(masks), action.group.order)
    return InvariantSubgroupFamily(
        action, stabilizing if stabilizing is not None else PermGroup.trivial(action.group.degree), table, tuple(masks)
    )


def o_p_invariant(action: GroupAction, prop: Property) -> PermGroup:
    """
    Return `O_P(G;A)`, the join of the `A C_G(A)`-invariant `P`-subgroups of `G`.

    :raise PreconditionError: if `G` is not itself a `P`-group and the property does not declare closure under
        subgroups, quotients and extensions.
    :raise TheoremViolationError: if the join is not a `P`-group.
    :raise ResourceLimitError: if `G` exceeds the oracle bound and the action has no power structure.
    """
    if prop.holds(action.group):
        return action.group
    prop.require(INVARIANT_CLOSURE_AXIOMS, "o_p_invariant")
    if not within_oracle_bound(action.group):
        if action.structure is None:
            raise ResourceLimitError(
                f"O_P(G;A) of a group of order {action.group.order} needs enumeration beyond the oracle bound"
            )
        return action.structure.o_p_invariant(action, prop, o_p_invariant)
    result = enumerate_invariant_subgroups(action, const.StabilizerMode.ACGA, prop).join()
    if not prop.holds(result):
        raise TheoremViolationError(
            f"O_{prop.name}(G;A) is a {prop.name}-group",
            {"group": action.group, "closure": result},
        )
    return result


def is_near_ap(action: GroupAction, sub: PermGroup, prop: Property) -> bool:
    """
    Return `True` when `C_H(A)` is a `P`-group.

    :raise NotInvariantError: if `H` is not invariant under the actors.
    """
    action.require_invariant(sub)
    if sub.order == action.group.order:
        return prop.holds(fixed_points(action))
    return prop.holds(centralizer(sub, action.actors))


def o_np_invariant(action: GroupAction, prop: Property) -> PermGroup:
    """
    Return `O_nP(G;A)`, the join of the `A C_G(A)`-invariant near `(A,P)`-subgroups.

    :raise TheoremViolationError: if the join is not a near `(A,P)`-group.
    """
    prop.require(NEAR_AXIOMS, "o_np_invariant")
    if is_near_ap(action, action.group, prop):
        return action.group
    family = enumerate_invariant_subgroups(action, const.StabilizerMode.ACGA)
    near = [m for m in family.masks if prop.holds(centralizer(family.table.subgroup(m), action.actors))]
    result = family.table.subgroup(family.table.join(IDENTITY_MASK, *near))
    _require_near(action, result, prop, "O_nP(G;A)")
    return result


def o_np_normal(action: GroupAction, prop: Property) -> PermGroup:
    """
    Return `O_nP(G)`, the join of the `A`-invariant normal near `(A,P)`-subgroups.

    :raise TheoremViolationError: if the join is not a near `(A,P)`-group.
    """
    prop.require(NEAR_AXIOMS, "o_np_normal")
    if is_near_ap(action, action.group, prop):
        return action.group
    table = element_table(action.group)
    maps = [table.conjugation_map(a) for a in action.actors.generators]
    result = IDENTITY_MASK
    for mask in table.normal_subgroups():
        if table.is_invariant(mask, maps) and prop.holds(centralizer(table.subgroup(mask), action.actors)):
            result = table.join(result, mask)
    closure = table.subgroup(result)
    _require_near(action, closure, prop, "O_nP(G)")
    return closure


def _require_near(action: GroupAction, sub: PermGroup, prop: Property, name: str) -> None:
    if not prop.holds(centralizer(sub, action.actors)):
        raise TheoremViolationError(
            f"{name} is a near (A,{prop.name})-group", {"group": action.group, "closure": sub}
        )
