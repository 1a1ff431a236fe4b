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
"""`(A,P)`-components and their embedding into the `(A,sol)`-components of the whole group."""
from dataclasses import dataclass
import logging

from pclose import const
from pclose.closures.action import CoprimeAction, GroupAction
from pclose.closures.fixed import fixed_points
from pclose.components.pcomp import PComponentSet, comp_p, is_p_quasisimple, stable_residual
from pclose.errors import NotInvariantError, PreconditionError, TheoremViolationError
from pclose.perm.group import PermGroup
from pclose.perm.subgroups import conjugates_under, is_subnormal, normalizes, sorted_groups
from pclose.properties.closure import o_p
from pclose.properties.property import Property, fixed_point_solvability
from pclose.properties.registry import SOLVABLE, TRIVIAL
from pclose.structure.composition import composition_factors, is_kgroup
from pclose.structure.layer import is_a_quasisimple, join_all

LOGGER = logging.getLogger(__name__)


def actor_orbits(action: GroupAction, members: tuple[PermGroup, ...]) -> list[list[PermGroup]]:
    """Partition subgroups permuted by the actors into actor orbits, in order of first appearance."""
    orbits: list[list[PermGroup]] = []
    assigned: list[PermGroup] = []
    for k in members:
        if any(k == seen for seen in assigned):
            continue
        orbit = conjugates_under(action.actors, k)
        orbits.append(orbit)
        assigned.extend(orbit)
    return orbits


def comp_ap(action: GroupAction, sub: PermGroup, prop: Property) -> PComponentSet:
    """
    Compute the `(A,P)`-components of an `A`-invariant subgroup `H`: the joins of the actor orbits on the
    `P`-components of `H`.

    :raise NotInvariantError: if `H` is not invariant under the actors.
    """
    action.require_invariant(sub)
    components = comp_p(sub, prop)
    joins = [join_all(orbit, sub.degree) for orbit in actor_orbits(action, components.members)]
    return PComponentSet(sub, prop, tuple(sorted_groups(joins)))


def comp_a(action: GroupAction, sub: PermGroup) -> PComponentSet:
    """The `A`-components, the `(A,P)`-components for the trivial property."""
    return comp_ap(action, sub, TRIVIAL)


def is_ap_component(action: GroupAction, group: PermGroup, sub: PermGroup, prop: Property) -> bool:
    """
    Decide directly whether `sub` is an `(A,P)`-component of `group`: actor-invariant, subnormal, equal to
    its own `O^P` and `A`-quasisimple modulo its `O_P`.
    """
    if sub.is_trivial or not action.is_invariant(sub) or not is_subnormal(group, sub):
        return False
    if stable_residual(sub, prop).order != sub.order:
        return False
    if o_p(sub, prop).is_trivial:
        return is_a_quasisimple(action, sub)
    members = comp_p(sub, prop).members
    if not members or join_all(members, sub.degree).order != sub.order:
        return False
    return len(actor_orbits(action, members)) == 1 and all(is_p_quasisimple(k, prop) for k in members)


@dataclass(frozen=True)
class EmbeddingReport:
    """Where an `(A,P)`-component of an invariant subgroup sits among the `(A,sol)`-components."""

    component: PermGroup
    candidates: tuple[PermGroup, ...]
    hypothesis: const.FixedPointStatus

    @property
    def target(self) -> PermGroup | None:
        return self.candidates[0] if self.candidates else None

    @property
    def is_violation(self) -> bool:
        """A missing target counts against the theorem only when the fixed-point restriction is accepted."""
        return not self.candidates and self.hypothesis == const.FixedPointStatus.Accepted


def _require_embedding_hypotheses(action: GroupAction, sub: PermGroup, component: PermGroup, prop: Property) -> None:
    if not isinstance(action, CoprimeAction):
        raise PreconditionError("Embedding needs a coprime action")
    factor = action.structure.factor if action.structure is not None else action.group
    if not is_kgroup(composition_factors(factor)):
        raise PreconditionError("Embedding needs the acted-on group to be a K-group")
    if not normalizes(action.actors.join(fixed_points(action)), sub):
        raise NotInvariantError("The subgroup is not invariant under A C_G(A)")
    if not any(component == k for k in comp_ap(action, sub, prop).members):
        raise PreconditionError(f"The subgroup is not an (A,{prop.name})-component of the invariant subgroup")


def embedding_report(action: GroupAction, sub: PermGroup, component: PermGroup, prop: Property) -> EmbeddingReport:
    """
    Find the `(A,sol)`-components of `G` containing an `(A,P)`-component `K` of an `A C_G(A)`-invariant `H`.

    :raise PreconditionError: if the action is not coprime, `G` is not a K-group or `K` is not an
        `(A,P)`-component of `H`.
    :raise NotInvariantError: if `H` is not `A C_G(A)`-invariant.
    :raise TheoremViolationError: if more than one `(A,sol)`-component contains `K`.
    """
    _require_embedding_hypotheses(action, sub, component, prop)
    candidates = tuple(comp_ap(action, action.group, SOLVABLE).containing(component))
    if len(candidates) > 1:
        raise TheoremViolationError(
            "unique (A,sol)-component containing K",
            {"component": component, "first": candidates[0], "second": candidates[1]},
        )
    report = EmbeddingReport(component, candidates, fixed_point_solvability(prop))
    if report.is_violation:
        LOGGER.error("No (A,sol)-component contains an (A,%s)-component of order %d", prop.name, component.order)
    elif report.target is None:
        LOGGER.warning("No (A,sol)-component contains the given component; '%s' is only corpus-tested", prop.name)
    return report


def embed_in_asol(action: GroupAction, sub: PermGroup, component: PermGroup, prop: Property) -> PermGroup | None:
    """Return the unique `(A,sol)`-component of `G` containing `K`, or `None` when there is none."""
    return embedding_report(action, sub, component, prop).target
