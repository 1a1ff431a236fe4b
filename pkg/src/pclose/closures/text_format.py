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
Action-spec text format.

A group spec of the wrapper followed by directive lines partitioning its generators::

    degree 6
    (1 2 3)
    (4 5 6)
    (2 3)(5 6)
    group: 1 2
    actors: 3
    prime: 2

Generator indices are 1-based positions in the file. An optional `power: m` line declares the group to be
the direct power `J^m` of its first coordinate block.
"""
from pathlib import Path
import re
from typing import Final, Sequence

from pclose.closures.action import CoprimeAction, GroupAction
from pclose.constructions.power import PowerStructure
from pclose.errors import ConstructionError
from pclose.perm.group import PermGroup
from pclose.perm.text_format import format_generators, parse_generators, significant_lines

_DIRECTIVE: Final[re.Pattern] = re.compile(r"^(group|actors|prime|power)\s*:\s*(.*)$")


def split_directives(lines: Sequence[str]) -> tuple[list[str], dict[str, str]]:
    """Separate generator lines from `name: value` directive lines."""
    body: list[str] = []
    directives: dict[str, str] = {}
    for line in lines:
        match = _DIRECTIVE.match(line)
        if match is None:
            body.append(line)
            continue
        name = match.group(1)
        if name in directives:
            raise ConstructionError(f"Directive `{name}` given twice")
        directives[name] = match.group(2).strip()
    return body, directives


def _indices(value: str, count: int, name: str) -> list[int]:
    try:
        indices = [int(x) - 1 for x in value.split()]
    except ValueError as e:
        raise ConstructionError(f"Non-numeric generator index in `{name}: {value}`") from e
    for i in indices:
        if not 0 <= i < count:
            raise ConstructionError(f"Generator index {i + 1} in `{name}` outside 1..{count}")
    return indices


def _integer(value: str, name: str) -> int:
    if not value.isdigit():
        raise ConstructionError(f"Expected a positive integer in `{name}: {value}`")
    return int(value)


def action_from_lines(lines: Sequence[str], *, coprime: bool = True) -> GroupAction:
    """
    Build an action from the significant lines of an action spec.

    :raise ConstructionError: if a directive is missing or malformed, or the generators do not partition
        the wrapper into a group and a complement of actors.
    """
    body, directives = split_directives(lines)
    for name in ("group", "actors", "prime"):
        if name not in directives:
            raise ConstructionError(f"Action spec lacks the `{name}:` line")
    degree, generators = parse_generators(body)
    group_idx = _indices(directives["group"], len(generators), "group")
    actor_idx = _indices(directives["actors"], len(generators), "actors")
    if set(group_idx) & set(actor_idx) or len(set(group_idx) | set(actor_idx)) != len(generators):
        raise ConstructionError("`group:` and `actors:` must partition the wrapper generators")
    group = PermGroup(degree, [generators[i] for i in group_idx])
    actors = PermGroup(degree, [generators[i] for i in actor_idx])
    structure = None
    if "power" in directives:
        structure = PowerStructure.from_power(group, _integer(directives["power"], "power"))
    cls = CoprimeAction if coprime else GroupAction
    prime = _integer(directives["prime"], "prime")
    return cls(PermGroup(degree, generators), group, actors, prime, structure=structure)


def parse_action_spec(text: str, *, coprime: bool = True) -> GroupAction:
    return action_from_lines(significant_lines(text), coprime=coprime)


def read_action_spec(path: Path | str, *, coprime: bool = True) -> GroupAction:
    return parse_action_spec(Path(path).read_text(encoding="utf-8"), coprime=coprime)


def format_action_spec(action: GroupAction) -> str:
    """Render an action; the wrapper generators are the group generators followed by the actor generators."""
    group_count = len(action.group.generators)
    actor_count = len(action.actors.generators)
    lines = [
        format_generators(action.wrapper.degree, action.group.generators + action.actors.generators).rstrip("\n"),
        "group: " + " ".join(str(i + 1) for i in range(group_count)),
        "actors: " + " ".join(str(group_count + i + 1) for i in range(actor_count)),
        f"prime: {action.prime}",
    ]
    if action.structure is not None:
        lines.append(f"power: {action.structure.copies}")
    return "\n".join(lines) + "\n"
