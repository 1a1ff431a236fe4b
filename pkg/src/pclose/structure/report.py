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
from collections import Counter
from dataclasses import dataclass
import logging

from pclose.compat.pydantic import pyd
from pclose.dto import BaseDto, GroupDto
from pclose.perm.group import PermGroup
from pclose.structure.composition import composition_factors, is_kgroup
from pclose.structure.layer import components, join_all
from pclose.structure.radical import fitting, solvable_radical

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, kw_only=True)
class StructureReport:
    """Structural invariants of a group."""

    group: PermGroup
    solvable_radical: PermGroup
    fitting: PermGroup
    generalized_fitting: PermGroup
    components: tuple[PermGroup, ...]
    layer: PermGroup
    composition_factors: Counter[str]
    is_kgroup: bool

    @property
    def order(self) -> int:
        return self.group.order

    def to_dto(self) -> "StructureReportDto":
        return StructureReportDto(
            order=self.order,
            solvable_radical=GroupDto.from_group(self.solvable_radical),
            fitting=GroupDto.from_group(self.fitting),
            generalized_fitting=GroupDto.from_group(self.generalized_fitting),
            components=[GroupDto.from_group(c) for c in self.components],
            layer=GroupDto.from_group(self.layer),
            composition_factors=dict(sorted(self.composition_factors.items())),
            is_kgroup=self.is_kgroup,
        )


class StructureReportDto(BaseDto):
    """JSON form of a structure report."""

    order: int
    solvable_radical: GroupDto
    fitting: GroupDto
    generalized_fitting: GroupDto
    components: list[GroupDto] = pyd.Field(default_factory=list)
    layer: GroupDto
    composition_factors: dict[str, int]
    is_kgroup: bool


def analyze(group: PermGroup) -> StructureReport:
    """Compute the structure report of a group."""
    comps = tuple(components(group))
    layer_group = join_all(comps, group.degree)
    fitting_group = fitting(group)
    labels = composition_factors(group)
    LOGGER.debug("Analyzed group of order %d: %d components", group.order, len(comps))
    return StructureReport(
        group=group,
        solvable_radical=solvable_radical(group),
        fitting=fitting_group,
        generalized_fitting=fitting_group.join(layer_group),
        components=comps,
        layer=layer_group,
        composition_factors=labels,
        is_kgroup=is_kgroup(labels),
    )
