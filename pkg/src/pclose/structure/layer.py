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
"""Minimal normal subgroups, quasisimplicity, components and the layer."""
import logging
from typing import TYPE_CHECKING, Sequence

from sympy.combinatorics import Permutation

from pclose.errors import InternalConsistencyError, NotInvariantError
from pclose.perm.group import PermGroup
from pclose.perm.oracle import IDENTITY_MASK, element_table, is_submask, within_oracle_bound
from pclose.perm.permutation import perm_key
from pclose.perm.quotient import quotient
from pclose.perm.subgroups import (
    center,
    centralizer,
    conjugates_under,
    is_perfect,
    normal_closure,
    perfect_core,
    sorted_groups,
)
from pclose.settings import get_settings
from pclose.structure.radical import fitting, solvable_radical
from pclose.structure.simple_groups import ORDER_LIMIT, is_simple_order
from pclose.utils import prime_divisors

if TYPE_CHECKING:
    from pclose.closures.action import GroupAction

LOGGER = logging.getLogger(__name__)


def probe_elements(group: PermGroup) -> list[Permutation]:
    """
    Deterministic probe set: generators, strong generators, seeded random elements and their prime-order powers.

    The random part depends on the seeded generator state.
    """
    raw = list(group.generators) + list(group.strong_generators)
    raw.extend(group.random_element() for _ in range(get_settings().probe_count))
    probes: dict[tuple[int, ...], Permutation] = {}
    for g in raw:
        if g.is_Identity:
            continue
        probes.setdefault(perm_key(g), g)
        order = g.order()
        for p in prime_divisors(order):
            power = g ** (order // p)
            probes.setdefault(perm_key(power), power)
    return list(probes.values())


def _minimal_normal_within(ambient: PermGroup, sub: PermGroup) -> PermGroup:
    """A minimal normal subgroup of `ambient` contained in the nontrivial normal subgroup `sub`."""
    if within_oracle_bound(ambient):
        table = element_table(ambient)
        sub_mask = table.mask_of(sub)
        for mask in table.normal_subgroups():
            if mask != IDENTITY_MASK and is_submask(mask, sub_mask):
                return table.subgroup(mask)
        raise InternalConsistencyError("Nontrivial normal subgroup contains no minimal normal subgroup")
    current = sub
    improved = True
    while improved:
        improved = False
        for x in probe_elements(current):
            closure = normal_closure(ambient, [x])
            if closure.order < current.order:
                current = closure
                improved = True
                break
    return current


def minimal_normal_subgroups(group: PermGroup) -> list[PermGroup]:
    """
    Return the minimal normal subgroups.

    Exact through the element table for small groups. Larger groups must have a trivial solvable radical;
    minimal normal subgroups are then collected one at a time inside the centralizer of those already found,
    which is trivial exactly when all have been found.
    """
    if group.is_trivial:
        return []
    if within_oracle_bound(group):
        table = element_table(group)
        normals = [m for m in table.normal_subgroups() if m != IDENTITY_MASK]
        minimal = [m for m in normals if not any(n != m and is_submask(n, m) for n in normals)]
        return [table.subgroup(m) for m in minimal]
    found: list[PermGroup] = []
    socle = PermGroup.trivial(group.degree)
    while True:
        remaining = group if not found else centralizer(group, socle)
        if remaining.is_trivial:
            break
        minimal = _minimal_normal_within(group, remaining)
        found.append(minimal)
        socle = socle.join(minimal)
    return sorted_groups(found)


def is_quasisimple(group: PermGroup) -> bool:
    """A perfect group whose quotient by the center is simple."""
    if group.is_trivial or not is_perfect(group):
        return False
    z = center(group)
    if within_oracle_bound(group):
        table = element_table(group)
        z_mask = table.mask_of(z)
        return all(is_submask(m, z_mask) or m == table.full_mask for m in table.normal_subgroups())
    central_quotient = group.order // z.order
    if central_quotient < ORDER_LIMIT and not is_simple_order(central_quotient):
        return False
    for x in probe_elements(group):
        if z.contains(x):
            continue
        if normal_closure(group, [x]).order != group.order:
            return False
    return True


def is_simple(group: PermGroup) -> bool:
    if group.is_trivial:
        return False
    if group.is_abelian:
        return _is_prime(group.order)
    return center(group).is_trivial and is_quasisimple(group)


def _is_prime(n: int) -> bool:
    return prime_divisors(n) == [n]


def simple_factors(ambient: PermGroup, minimal: PermGroup) -> list[PermGroup]:
    """Split a nonabelian minimal normal subgroup into its simple direct factors, conjugate under `ambient`."""
    if is_simple(minimal):
        return [minimal]
    factor = _minimal_normal_within(minimal, minimal)
    orbit = conjugates_under(ambient, factor)
    if factor.order ** len(orbit) != minimal.order:
        raise InternalConsistencyError(
            f"Minimal normal subgroup of order {minimal.order} is not a power of a factor of order {factor.order}"
        )
    return sorted_groups(orbit)


def components(group: PermGroup) -> list[PermGroup]:
    """
    Return the subnormal quasisimple subgroups.

    The simple factors of the minimal normal subgroups of `G/Sol(G)` are lifted to `G`; the perfect core of
    each preimage is the candidate, kept when it is quasisimple.
    """
    radical = solvable_radical(group)
    if radical.order == group.order:
        return []
    target, hom = quotient(group, radical)
    result = []
    for minimal in minimal_normal_subgroups(target):
        for factor in simple_factors(target, minimal):
            candidate = perfect_core(hom.preimage(factor))
            if is_quasisimple(candidate):
                result.append(candidate)
            else:
                LOGGER.debug("Lifted candidate of order %d is not quasisimple", candidate.order)
    return sorted_groups(result)


def join_all(groups: Sequence[PermGroup], degree: int) -> PermGroup:
    result = PermGroup.trivial(degree)
    for g in groups:
        result = result.join(g)
    return result


def layer(group: PermGroup) -> PermGroup:
    """Return `E(group)`, the product of the components."""
    return join_all(components(group), group.degree)


def generalized_fitting(group: PermGroup) -> PermGroup:
    """Return `F*(group) = F(group) E(group)`."""
    return fitting(group).join(layer(group))


def is_a_quasisimple(action: "GroupAction", group: PermGroup) -> bool:
    """
    Return `True` when `group` is perfect and its central quotient is a product of simple groups permuted
    transitively by the actors.

    :raise NotInvariantError: if `group` is not invariant under the actors.
    """
    if not action.is_invariant(group):
        raise NotInvariantError(f"{group!r} is not invariant under the actors")
    if group.is_trivial or not is_perfect(group):
        return False
    comps = components(group)
    if not comps or join_all(comps, group.degree).order != group.order:
        return False
    orbit = conjugates_under(action.actors, comps[0])
    return len(orbit) == len(comps)
