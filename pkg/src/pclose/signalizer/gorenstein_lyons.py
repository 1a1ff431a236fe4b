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
"""Completeness of functors whose values have solvable-components fixed by the actors."""
from dataclasses import dataclass
import logging

from pclose.compat.pydantic import pyd
from pclose.components.pcomp import comp_p
from pclose.dto import BaseDto
from pclose.perm.group import PermGroup
from pclose.properties.registry import SOLVABLE
from pclose.signalizer.completeness import CompletenessReport, CompletenessReportDto, completeness
from pclose.signalizer.functor import SignalizerFunctor, require_kgroup_values, require_rank, split_value

LOGGER = logging.getLogger(__name__)

MINIMUM_RANK = 3


@dataclass(frozen=True)
class ValueComponents:
    """The solvable-components of one value and those moved by some actor."""

    word: str
    components: tuple[PermGroup, ...]
    moved: tuple[PermGroup, ...]

    @property
    def fixed_by_actors(self) -> bool:
        return not self.moved


class GorensteinLyonsReportDto(BaseDto):
    hypothesis: bool
    conclusion: bool | None = None
    passed: bool
    component_counts: dict[str, int] = pyd.Field(default_factory=dict)
    moved: list[str] = pyd.Field(default_factory=list)
    completeness: CompletenessReportDto | None = None


@dataclass(frozen=True)
class GorensteinLyonsReport:
    """
    Whether the actors fix every solvable-component of every value and, when they do, whether the functor is
    complete.
    """

    values: tuple[ValueComponents, ...]
    completeness: CompletenessReport | None

    @property
    def hypothesis(self) -> bool:
        return all(v.fixed_by_actors for v in self.values)

    @property
    def conclusion(self) -> bool | None:
        return self.completeness.complete if self.completeness is not None else None

    @property
    def passed(self) -> bool:
        return not self.hypothesis or bool(self.conclusion)

    def to_dto(self) -> GorensteinLyonsReportDto:
        return GorensteinLyonsReportDto(
            hypothesis=self.hypothesis,
            conclusion=self.conclusion,
            passed=self.passed,
            component_counts={v.word: len(v.components) for v in self.values},
            moved=[v.word for v in self.values if not v.fixed_by_actors],
            completeness=self.completeness.to_dto() if self.completeness is not None else None,
        )


def solvable_components(
    functor: SignalizerFunctor, value: PermGroup, known: list[tuple[PermGroup, tuple[PermGroup, ...]]] | None = None
) -> list[PermGroup]:
    """
    `Comp_sol` of a value, computed coordinate by coordinate inside a structured power.

    `known` collects the components of the factor-level pieces already seen.
    """
    known = [] if known is None else known
    result = []
    for part, lift in split_value(functor.action, value):
        members = next((m for seen, m in known if seen == part), None)
        if members is None:
            members = comp_p(part, SOLVABLE).members
            known.append((part, members))
        result.extend(lift(k) for k in members)
    return result


def gorenstein_lyons_check(functor: SignalizerFunctor) -> GorensteinLyonsReport:
    """
    Test whether the actors act trivially on `Comp_sol(θ(a))` for every `a` and, if so, whether `θ` is complete.

    :raise PreconditionError: if the actors have rank below 3, the functor fails verification or a value is
        not a K-group.
    """
    require_rank(functor, MINIMUM_RANK, "gorenstein_lyons_check")
    functor.require_verified("gorenstein_lyons_check")
    require_kgroup_values(functor, "gorenstein_lyons_check")
    action = functor.action
    values = []
    known: list[tuple[PermGroup, tuple[PermGroup, ...]]] = []
    for coords, value in functor.items():
        components = solvable_components(functor, value, known)
        moved = tuple(k for k in components if not action.is_invariant(k))
        values.append(ValueComponents(functor.word(coords), tuple(components), moved))
    hypothesis = all(v.fixed_by_actors for v in values)
    report = GorensteinLyonsReport(tuple(values), completeness(functor) if hypothesis else None)
    if hypothesis and not report.conclusion:
        LOGGER.error("Actors fix all solvable-components but the functor is not complete")
    elif not hypothesis:
        LOGGER.info("Actors move a solvable-component of theta(%s)", next(v.word for v in values if v.moved))
    return report
