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
from typing import Any

from pclose.compat.pydantic import pyd
from pclose.perm.group import PermGroup


class BaseDto(pyd.BaseModel):
    """Base class of report DTOs."""

    class Config:
        allow_mutation = False

    def to_serializable(self) -> dict[str, Any]:
        return self.dict()


class GroupDto(BaseDto):
    """A subgroup rendered as its generators in 1-based cycle notation."""

    degree: int
    order: int
    generators: list[str] = pyd.Field(default_factory=list)

    @classmethod
    def from_group(cls, group: PermGroup) -> "GroupDto":
        return cls(degree=group.degree, order=group.order, generators=group.cycle_generators())
