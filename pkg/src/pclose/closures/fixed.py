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
"""Fixed points of actors and commutators with actors."""
import logging

from sympy.combinatorics import Permutation

from pclose.closures.action import GroupAction
from pclose.perm.group import PermGroup
from pclose.perm.subgroups import centralizer, commutator_subgroup, normal_closure

LOGGER = logging.getLogger(__name__)


def fixed_points(action: GroupAction, sub: PermGroup | None = None) -> PermGroup:
    """
    Return `C_G(S)` for a subgroup `S` of the actors, all actors when omitted.

    Structured power actions use the coordinate formula instead of a centralizer search.

    :raise NotContainedError: if `S` is not a subgroup of the actors.
    """
    actors = action.actors if sub is None else sub
    action.require_actor_subgroup(actors)
    if actors.is_trivial:
        return action.group
    if action.structure is not None:
        return action.structure.fixed_points(actors.generators)
    return centralizer(action.group, actors)


def fixed_points_of(action: GroupAction, a: Permutation) -> PermGroup:
    """Return `C_G(a)` for a single actor `a`."""
    return fixed_points(action, PermGroup(action.actors.degree, [a]))


def fixed_points_within(action: GroupAction, sub: PermGroup, actors: PermGroup | Permutation) -> PermGroup:
    """Return `C_H(S)` for a subgroup `H` of the acted-on group; the whole group goes through `fixed_points`."""
    if isinstance(actors, Permutation):
        actors = PermGroup(action.actors.degree, [actors])
    if sub.order == action.group.order:
        return fixed_points(action, actors)
    if actors.is_trivial or sub.is_trivial:
        return sub
    return centralizer(sub, actors)


def commutator_with(action: GroupAction, sub: PermGroup | None = None) -> PermGroup:
    """
    Return `[G, S]`, the subgroup generated by the commutators of group elements with actors in `S`.

    It is normal in `G`, so it is the normal closure in `G` of the generator commutators.
    """
    actors = action.actors if sub is None else sub
    action.require_actor_subgroup(actors)
    return commutator_subgroup(action.group, actors) if not actors.is_trivial else PermGroup.trivial(actors.degree)


def commutator_in(group: PermGroup, actor: Permutation) -> PermGroup:
    """Return `[X, t]` for an actor-invariant subgroup `X`, the normal closure in `X` of `[x, t]`."""
    seeds = [~x * ~actor * x * actor for x in group.generators]
    return normal_closure(group, [s for s in seeds if not s.is_Identity])
