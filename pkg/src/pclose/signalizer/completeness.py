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
"""Hyperplane values `θ(B)` and completeness of a functor."""
from dataclasses import dataclass
import logging

from pclose.closures.action import Coordinates
from pclose.closures.fixed import fixed_points_within
from pclose.compat.pydantic import pyd
from pclose.dto import BaseDto, GroupDto
from pclose.errors import PreconditionError, TheoremViolationError
from pclose.perm.group import PermGroup
from pclose.signalizer.functor import SignalizerFunctor
from pclose.structure.layer import join_all

LOGGER = logging.getLogger(__name__)


def functor_restrict_hyperplane(functor: SignalizerFunctor, hyperplane: PermGroup) -> PermGroup:
    """
    Return `θ(B) = θ(b) ∩ C_G(B)`, checking that every `b ∈ B#` gives the same subgroup.

    :raise PreconditionError: if the actors have rank below 2 or `B` is not of index `r` in the actors.
    :raise TheoremViolationError: if two choices of `b` disagree.
    """
    action = functor.action
    if action.rank < 2:
        raise PreconditionError(f"Actors of rank {action.rank} have no hyperplanes")
    action.require_actor_subgroup(hyperplane)
    if hyperplane.order * action.prime != action.actors.order:
        raise PreconditionError(f"A subgroup of order {hyperplane.order} is not a hyperplane of the actors")
    members = [c for c in functor.representatives if hyperplane.contains(functor.element(c))]
    result = functor.fixed_in_value(members[0], hyperplane)
    for coords in members[1:]:
        other = functor.fixed_in_value(coords, hyperplane)
        if other != result:
            raise TheoremViolationError(
                "theta(B) does not depend on the choice of b",
                {"hyperplane": hyperplane, "first": result, "second": other},
            )
    return result


def hyperplane_values(functor: SignalizerFunctor) -> list[tuple[Coordinates, PermGroup]]:
    """`θ(B)` for every hyperplane, keyed by the functional defining it."""
    frame = functor.action.frame
    return [(f, functor_restrict_hyperplane(functor, frame.hyperplane(f))) for f in frame.hyperplane_functionals()]


class CompletenessReportDto(BaseDto):
    closure: GroupDto
    closure_is_rprime: bool
    fixed_point_match: dict[str, bool] = pyd.Field(default_factory=dict)
    generated_by_hyperplanes: bool | None = None
    complete: bool


@dataclass(frozen=True)
class CompletenessReport:
    """
    The closure `⟨θ(a) : a ∈ A#⟩`, whether it is an `r'`-group, and for each `a` whether `C_closure(a) = θ(a)`.

    `generated_by_hyperplanes` records whether the hyperplane values generate the same closure; it is `None`
    below rank 2.
    """

    closure: PermGroup
    closure_is_rprime: bool
    fixed_point_match: dict[str, bool]
    generated_by_hyperplanes: bool | None = None

    @property
    def complete(self) -> bool:
        return self.closure_is_rprime and all(self.fixed_point_match.values())

    def to_dto(self) -> CompletenessReportDto:
        return CompletenessReportDto(
            closure=GroupDto.from_group(self.closure),
            closure_is_rprime=self.closure_is_rprime,
            fixed_point_match=self.fixed_point_match,
            generated_by_hyperplanes=self.generated_by_hyperplanes,
            complete=self.complete,
        )


def functor_closure(functor: SignalizerFunctor) -> PermGroup:
    return join_all([value for _, value in functor.items()], functor.action.group.degree)


def completeness(functor: SignalizerFunctor) -> CompletenessReport:
    """
    Decide whether the functor is complete.

    :raise PreconditionError: if the functor fails verification.
    """
    functor.require_verified("completeness")
    action = functor.action
    closure = functor_closure(functor)
    matches = {
        functor.word(c): fixed_points_within(action, closure, functor.element(c)) == value
        for c, value in functor.items()
    }
    by_hyperplanes = None
    if action.rank >= 2:
        generated = join_all([value for _, value in hyperplane_values(functor)], closure.degree)
        by_hyperplanes = generated == closure
        if not by_hyperplanes:
            LOGGER.error(
                "Hyperplane values generate a group of order %d, the closure has order %d",
                generated.order,
                closure.order,
            )
    report = CompletenessReport(closure, closure.order % action.prime != 0, matches, by_hyperplanes)
    LOGGER.debug("Closure of order %d, complete: %s", closure.order, report.complete)
    return report
