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
"""The closure operators `O_P` and `O^P`."""
import logging

from pclose.errors import ResourceLimitError, TheoremViolationError
from pclose.perm.group import PermGroup
from pclose.perm.oracle import IDENTITY_MASK, element_table, within_oracle_bound
from pclose.properties.property import Axiom, CLOSURE_AXIOMS, RESIDUAL_AXIOMS, Property

LOGGER = logging.getLogger(__name__)


def o_p(group: PermGroup, prop: Property) -> PermGroup:
    """
    Return `O_P(group)`, the largest normal `P`-subgroup.

    :raise PreconditionError: if the property does not declare closure under subgroups, quotients and normal
        products.
    :raise ResourceLimitError: if the property has no fast path and the group exceeds the oracle bound.
    """
    prop.require(CLOSURE_AXIOMS, "o_p")
    if prop.holds(group):
        return group
    if prop.radical is not None:
        return prop.radical(group)
    return o_p_by_oracle(group, prop)


def o_p_by_oracle(group: PermGroup, prop: Property) -> PermGroup:
    """
    `O_P` as the join of the normal `P`-subgroups found by the element table.

    :raise TheoremViolationError: if the join is not a `P`-group.
    """
    _require_oracle(group, prop, "O_P")
    table = element_table(group)
    result = IDENTITY_MASK
    for mask in table.normal_subgroups():
        if prop.holds(table.subgroup(mask)):
            result = table.join(result, mask)
    radical = table.subgroup(result)
    if not prop.holds(radical):
        raise TheoremViolationError(
            Axiom.NormalProduct,
            {"group": group, "join": radical},
            f"The normal {prop.name}-subgroups of a group of order {group.order} generate a non-{prop.name} group",
        )
    return radical


def o_upper_p(group: PermGroup, prop: Property) -> PermGroup:
    """
    Return `O^P(group)`, the smallest normal subgroup with a `P`-quotient.

    :raise PreconditionError: if the property does not declare closure under subgroups and quotients and
        under intersections of normal subgroups with `P`-quotients.
    :raise ResourceLimitError: if the property has no fast path and the group exceeds the oracle bound.
    """
    prop.require(RESIDUAL_AXIOMS, "o_upper_p")
    if prop.holds(group):
        return PermGroup.trivial(group.degree)
    if prop.residual is not None:
        return prop.residual(group)
    return o_upper_p_by_oracle(group, prop)


def o_upper_p_by_oracle(group: PermGroup, prop: Property) -> PermGroup:
    """
    `O^P` as the intersection of the normal subgroups with `P`-quotient found by the element table.

    :raise TheoremViolationError: if the quotient by the intersection is not a `P`-group.
    """
    _require_oracle(group, prop, "O^P")
    table = element_table(group)
    result = table.full_mask
    for mask in table.normal_subgroups():
        if prop.holds_for_quotient(group, table.subgroup(mask)):
            result &= mask
    residual = table.subgroup(result)
    if not prop.holds_for_quotient(group, residual):
        raise TheoremViolationError(
            Axiom.IntersectionQuotient,
            {"group": group, "intersection": residual},
            f"Normal subgroups with {prop.name} quotients intersect in one without",
        )
    return residual


def _require_oracle(group: PermGroup, prop: Property, operation: str) -> None:
    if not within_oracle_bound(group):
        raise ResourceLimitError(
            f"{operation} for property '{prop.name}' has no fast path and order {group.order} exceeds the oracle bound"
        )
    LOGGER.debug("Computing %s of a group of order %d for '%s' by enumeration", operation, group.order, prop.name)
